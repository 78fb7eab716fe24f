#pragma once

/// JSON wire format for every public type. Rationals travel as "p/q"
/// strings so nothing is ever rounded; integers are JSON numbers when they
/// fit in 64 bits and decimal strings otherwise (parsers accept both).
/// Parsing canonicalizes (mod 1, Hermite form, invariant factors), so
/// serialize ∘ parse ∘ serialize is the identity on strings.

#include <nlohmann/json.hpp>

#include "toral/approx.hpp"
#include "toral/finabelian.hpp"
#include "toral/intmatrix.hpp"
#include "toral/lattice.hpp"
#include "toral/multitab.hpp"
#include "toral/numeric.hpp"
#include "toral/torusgroup.hpp"

namespace toral {

using Json = nlohmann::json;

Json json_of(const Int& v);
Json json_of(const Rat& v);
Json json_of(const IntMatrix& m);
Json json_of(const Lattice& l);
Json json_of(const SnfResult& s);
Json json_of(const TorusPoint& x);
Json json_of(const TorusSubgroup& k);
Json json_of(const Weights& w);
Json json_of(const FinAbelian& g);
Json json_of(const FgAbelian& g);
Json json_of(const TorusDecomposition& d);
Json json_of(const FiniteQuotientMap& phi);
Json json_of(const DirichletResult& r);
Json json_of(const ApproxCertificate& cert);
Json json_of(const PartialTable& t);
Json json_of(const FiniteGroupTable& g);
Json json_of(const Word& w);
Json json_of(const EqSystem& s);

/// All parsers throw Errc::parse_error on shape errors and let the type's
/// own constructor validation surface anything deeper.
Int int_from_json(const Json& j);
Rat rat_from_json(const Json& j);
IntMatrix intmatrix_from_json(const Json& j);
Lattice lattice_from_json(const Json& j);
SnfResult snf_from_json(const Json& j);
TorusPoint point_from_json(const Json& j);
TorusSubgroup subgroup_from_json(const Json& j);
Weights weights_from_json(const Json& j);
FinAbelian finabelian_from_json(const Json& j);
FgAbelian fgabelian_from_json(const Json& j);
TorusDecomposition decomposition_from_json(const Json& j);
FiniteQuotientMap quotient_map_from_json(const Json& j);
DirichletResult dirichlet_from_json(const Json& j);
ApproxCertificate certificate_from_json(const Json& j);
PartialTable partial_table_from_json(const Json& j);
FiniteGroupTable table_from_json(const Json& j);
Word word_from_json(const Json& j);
EqSystem system_from_json(const Json& j);

}  // namespace toral
