#include "toral/serialize.hpp"

#include <map>
#include <string>
#include <vector>

#include "toral/error.hpp"

namespace toral {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::parse_error, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t size_from_json(const Json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        bad(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

bool bool_from_json(const Json& j, const char* what) {
    if (!j.is_boolean()) bad(std::string(what) + " must be a boolean");
    return j.get<bool>();
}

template <typename T, typename Fn>
std::vector<T> list_from_json(const Json& j, const char* what, Fn parse) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    std::vector<T> out;
    out.reserve(j.size());
    for (const Json& item : j) out.push_back(parse(item));
    return out;
}

Json json_of_points(const std::vector<TorusPoint>& points) {
    Json out = Json::array();
    for (const TorusPoint& x : points) out.push_back(json_of(x));
    return out;
}

}  // namespace

Json json_of(const Int& v) {
    if (v.fits_slong_p()) return Json(static_cast<long>(v.get_si()));
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            bad("malformed integer string \"" + j.get<std::string>() + "\"");
        }
    }
    bad("expected an integer (number or decimal string)");
}

Json json_of(const Rat& v) { return Json(rat_to_string(v)); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(Int(j.get<long>()));
    if (j.is_string()) {
        if (auto r = rat_from_string(j.get<std::string>())) return *r;
        bad("malformed rational \"" + j.get<std::string>() + "\"");
    }
    bad("expected a rational \"p/q\" string");
}

Json json_of(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(json_of(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix intmatrix_from_json(const Json& j) {
    if (!j.is_array()) bad("matrix must be an array of rows");
    std::vector<std::vector<Int>> rows;
    rows.reserve(j.size());
    for (const Json& row : j)
        rows.push_back(list_from_json<Int>(row, "matrix row", int_from_json));
    return IntMatrix(rows);
}

Json json_of(const Lattice& l) {
    return Json{{"ambient", l.ambient()}, {"basis", json_of(l.basis())}};
}

Lattice lattice_from_json(const Json& j) {
    std::size_t ambient = size_from_json(field(j, "ambient"), "ambient");
    const Json& basis = field(j, "basis");
    if (!basis.is_array()) bad("basis must be an array of rows");
    IntMatrix m(0, ambient);
    for (const Json& row : basis)
        m.append_row(list_from_json<Int>(row, "basis row", int_from_json));
    return hnf(m);
}

Json json_of(const SnfResult& s) {
    return Json{{"u", json_of(s.u)}, {"d", json_of(s.d)}, {"v", json_of(s.v)}};
}

SnfResult snf_from_json(const Json& j) {
    return SnfResult{intmatrix_from_json(field(j, "u")), intmatrix_from_json(field(j, "d")),
                     intmatrix_from_json(field(j, "v"))};
}

Json json_of(const TorusPoint& x) {
    Json out = Json::array();
    for (const CirclePoint& c : x.coords()) out.push_back(json_of(c.value()));
    return out;
}

TorusPoint point_from_json(const Json& j) {
    return TorusPoint(list_from_json<Rat>(j, "point", rat_from_json));
}

Json json_of(const TorusSubgroup& k) {
    return Json{{"ambient", k.ambient()}, {"annihilator", json_of(k.annihilator().basis())}};
}

TorusSubgroup subgroup_from_json(const Json& j) {
    std::size_t ambient = size_from_json(field(j, "ambient"), "ambient");
    const Json& ann = field(j, "annihilator");
    if (!ann.is_array()) bad("annihilator must be an array of rows");
    IntMatrix m(0, ambient);
    for (const Json& row : ann)
        m.append_row(list_from_json<Int>(row, "annihilator row", int_from_json));
    return TorusSubgroup(hnf(m));
}

Json json_of(const Weights& w) {
    Json out = Json::array();
    for (const Rat& v : w.values()) out.push_back(json_of(v));
    return out;
}

Weights weights_from_json(const Json& j) {
    std::vector<Rat> values = list_from_json<Rat>(j, "weights", rat_from_json);
    if (values.empty()) return Weights();
    return Weights(std::move(values));
}

Json json_of(const FinAbelian& g) {
    Json factors = Json::array();
    for (const Int& d : g.invariant_factors()) factors.push_back(json_of(d));
    return Json{{"invariant_factors", factors}};
}

FinAbelian finabelian_from_json(const Json& j) {
    return FinAbelian::of(
        list_from_json<Int>(field(j, "invariant_factors"), "invariant_factors", int_from_json));
}

Json json_of(const FgAbelian& g) {
    Json out = json_of(g.torsion);
    out["free_rank"] = g.free_rank;
    return out;
}

FgAbelian fgabelian_from_json(const Json& j) {
    return FgAbelian{size_from_json(field(j, "free_rank"), "free_rank"),
                     finabelian_from_json(j)};
}

Json json_of(const TorusDecomposition& d) {
    return Json{{"finite_generators", json_of_points(d.finite_generators)},
                {"directions", json_of(d.directions)}};
}

TorusDecomposition decomposition_from_json(const Json& j) {
    return TorusDecomposition{list_from_json<TorusPoint>(field(j, "finite_generators"),
                                                         "finite_generators", point_from_json),
                              intmatrix_from_json(field(j, "directions"))};
}

Json json_of(const FiniteQuotientMap& phi) {
    Json assignment = Json::array();
    for (const auto& [point, value] : phi.assignment()) {
        Json tuple = Json::array();
        for (const Int& a : value) tuple.push_back(json_of(a));
        assignment.push_back(Json{{"point", json_of(point)}, {"value", std::move(tuple)}});
    }
    return Json{{"domain", json_of(phi.domain())},
                {"codomain", json_of(phi.codomain())},
                {"assignment", std::move(assignment)}};
}

FiniteQuotientMap quotient_map_from_json(const Json& j) {
    const Json& entries = field(j, "assignment");
    if (!entries.is_array()) bad("assignment must be an array");
    std::map<TorusPoint, std::vector<Int>> assignment;
    for (const Json& entry : entries) {
        TorusPoint point = point_from_json(field(entry, "point"));
        std::vector<Int> value = list_from_json<Int>(field(entry, "value"), "value", int_from_json);
        if (!assignment.emplace(std::move(point), std::move(value)).second)
            bad("assignment lists a point twice");
    }
    return FiniteQuotientMap(subgroup_from_json(field(j, "domain")),
                             finabelian_from_json(field(j, "codomain")), std::move(assignment));
}

Json json_of(const DirichletResult& r) {
    Json p = Json::array();
    for (const Int& v : r.p) p.push_back(json_of(v));
    Json bounds = Json::array();
    for (const Rat& v : r.bound_check) bounds.push_back(json_of(v));
    return Json{{"p", std::move(p)}, {"q", json_of(r.q)}, {"bound_check", std::move(bounds)}};
}

DirichletResult dirichlet_from_json(const Json& j) {
    DirichletResult out;
    out.p = list_from_json<Int>(field(j, "p"), "p", int_from_json);
    out.q = int_from_json(field(j, "q"));
    out.bound_check = list_from_json<Rat>(field(j, "bound_check"), "bound_check", rat_from_json);
    return out;
}

Json json_of(const ApproxCertificate& cert) {
    return Json{{"input", json_of(cert.input)},
                {"output", json_of(cert.output)},
                {"epsilon", json_of(cert.epsilon)},
                {"weights", json_of(cert.weights)},
                {"net", json_of_points(cert.net)},
                {"big_m", json_of(cert.big_m)},
                {"dirichlet", json_of(cert.dirichlet)},
                {"shortcut", cert.shortcut},
                {"exact", cert.exact},
                {"dh_mesh", json_of(cert.dh_mesh)},
                {"dh_lower", json_of(cert.dh_lower)},
                {"dh_upper", json_of(cert.dh_upper)}};
}

ApproxCertificate certificate_from_json(const Json& j) {
    ApproxCertificate cert;
    cert.input = subgroup_from_json(field(j, "input"));
    cert.output = subgroup_from_json(field(j, "output"));
    cert.epsilon = rat_from_json(field(j, "epsilon"));
    cert.weights = weights_from_json(field(j, "weights"));
    cert.net = list_from_json<TorusPoint>(field(j, "net"), "net", point_from_json);
    cert.big_m = int_from_json(field(j, "big_m"));
    cert.dirichlet = dirichlet_from_json(field(j, "dirichlet"));
    cert.shortcut = bool_from_json(field(j, "shortcut"), "shortcut");
    cert.exact = bool_from_json(field(j, "exact"), "exact");
    cert.dh_mesh = rat_from_json(field(j, "dh_mesh"));
    cert.dh_lower = rat_from_json(field(j, "dh_lower"));
    cert.dh_upper = rat_from_json(field(j, "dh_upper"));
    return cert;
}

namespace {

Json json_of_entries(std::size_t size, auto entry) {
    Json rows = Json::array();
    for (unsigned i = 1; i <= size; ++i) {
        Json row = Json::array();
        for (unsigned j = 1; j <= size; ++j) row.push_back(entry(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<unsigned>> entries_from_json(const Json& j, std::size_t size) {
    if (!j.is_array()) bad("entries must be an array of rows");
    std::vector<std::vector<unsigned>> rows;
    rows.reserve(j.size());
    for (const Json& row : j)
        rows.push_back(list_from_json<unsigned>(row, "entries row", [](const Json& cell) {
            if (!cell.is_number_integer() || cell.get<long long>() < 0)
                bad("table entries must be non-negative integers");
            return cell.get<unsigned>();
        }));
    if (rows.size() != size) bad("entries row count does not match size");
    return rows;
}

}  // namespace

Json json_of(const PartialTable& t) {
    return Json{{"size", t.size()},
                {"entries", json_of_entries(t.size(), [&](unsigned i, unsigned j) {
                     return t.entry(i, j);
                 })}};
}

PartialTable partial_table_from_json(const Json& j) {
    std::size_t size = size_from_json(field(j, "size"), "size");
    return PartialTable(size, entries_from_json(field(j, "entries"), size));
}

Json json_of(const FiniteGroupTable& g) {
    return Json{{"size", g.size()},
                {"entries", json_of_entries(g.size(), [&](unsigned i, unsigned j) {
                     return g.entry(i, j);
                 })}};
}

FiniteGroupTable table_from_json(const Json& j) {
    std::size_t size = size_from_json(field(j, "size"), "size");
    return FiniteGroupTable(size, entries_from_json(field(j, "entries"), size));
}

Json json_of(const Word& w) {
    Json out = Json::array();
    for (const Letter& letter : w) {
        const char* key = letter.kind == Letter::Kind::variable ? "var" : "const";
        out.push_back(Json{{key, letter.id}, {"exp", letter.exp}});
    }
    return out;
}

Word word_from_json(const Json& j) {
    return list_from_json<Letter>(j, "word", [](const Json& item) {
        if (!item.is_object()) bad("word letters must be objects");
        int exp = 1;
        if (item.contains("exp")) {
            if (!item.at("exp").is_number_integer()) bad("exp must be ±1");
            exp = item.at("exp").get<int>();
        }
        if (exp != 1 && exp != -1) bad("exp must be ±1");
        bool has_var = item.contains("var"), has_const = item.contains("const");
        if (has_var == has_const) bad("each letter needs exactly one of \"var\"/\"const\"");
        const Json& id = item.at(has_var ? "var" : "const");
        if (!id.is_number_integer() || id.get<long long>() < 1)
            bad("letter index must be a positive integer");
        return Letter{has_var ? Letter::Kind::variable : Letter::Kind::constant,
                      id.get<unsigned>(), exp};
    });
}

Json json_of(const EqSystem& s) {
    Json equations = Json::array(), inequations = Json::array();
    for (const Word& w : s.equations) equations.push_back(json_of(w));
    for (const Word& w : s.inequations) inequations.push_back(json_of(w));
    return Json{{"equations", std::move(equations)}, {"inequations", std::move(inequations)}};
}

EqSystem system_from_json(const Json& j) {
    EqSystem out;
    out.equations = list_from_json<Word>(field(j, "equations"), "equations", word_from_json);
    out.inequations = list_from_json<Word>(field(j, "inequations"), "inequations", word_from_json);
    return out;
}

}  // namespace toral
