#include "rouquier/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rouquier {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw DatasetSemanticError(where + ": " + what);
}

void expect_keys(const Json& j, const std::string& where,
                 std::initializer_list<std::string_view> required,
                 std::initializer_list<std::string_view> optional = {}) {
    if (!j.is_object()) fail(where, "expected an object");
    for (const auto& [key, value] : j.items()) {
        const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                           std::find(optional.begin(), optional.end(), key) != optional.end();
        if (!known) fail(where, "unknown key '" + key + "'");
    }
    for (auto key : required) {
        if (!j.contains(std::string(key))) fail(where, "missing key '" + std::string(key) + "'");
    }
}

const Json& expect_array(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    return j;
}

std::int64_t get_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<std::int64_t>();
}

std::uint64_t get_positive(const Json& j, const std::string& where) {
    const auto v = get_int(j, where);
    if (v < 1) fail(where, "expected a positive integer");
    return static_cast<std::uint64_t>(v);
}

std::string get_string(const Json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a string");
    return j.get<std::string>();
}

Rational parse_rational(const Json& j, const std::string& where) {
    const std::string text = get_string(j, where);
    const auto slash = text.find('/');
    auto digits = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    const std::string_view num = std::string_view(text).substr(0, slash);
    const bool ok = digits(num, true) &&
                    (slash == std::string::npos || digits(std::string_view(text).substr(slash + 1), false));
    if (!ok) fail(where, "malformed rational \"" + text + "\"");
    Rational q(text, 10);
    if (q.get_den() == 0) fail(where, "zero denominator in \"" + text + "\"");
    q.canonicalize();
    return q;
}

CycNum parse_cycnum(const Json& j, const std::string& where) {
    expect_keys(j, where, {"conductor", "coeffs"});
    const auto c = get_positive(j["conductor"], where + ".conductor");
    const auto& arr = expect_array(j["coeffs"], where + ".coeffs");
    if (arr.size() != euler_phi(c)) {
        fail(where, "expected " + std::to_string(euler_phi(c)) + " coefficients for conductor " +
                        std::to_string(c) + ", got " + std::to_string(arr.size()));
    }
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        coeffs.push_back(parse_rational(arr[i], where + ".coeffs[" + std::to_string(i) + "]"));
    }
    return CycNum(c, std::move(coeffs));
}

CycPoly parse_cycpoly(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("kind")) fail(where, "expected a polynomial with a 'kind'");
    const std::string kind = get_string(j["kind"], where + ".kind");
    if (kind == "named") {
        expect_keys(j, where, {"kind", "n"});
        return CycPoly::named(get_positive(j["n"], where + ".n"));
    }
    if (kind != "explicit") fail(where, "unknown polynomial kind '" + kind + "'");
    expect_keys(j, where, {"kind", "conductor", "coeffs"});
    const auto c = get_positive(j["conductor"], where + ".conductor");
    const auto& arr = expect_array(j["coeffs"], where + ".coeffs");
    std::vector<CycNum> coeffs;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string w = where + ".coeffs[" + std::to_string(i) + "]";
        CycNum x = parse_cycnum(arr[i], w);
        if (c % x.conductor() != 0) fail(w, "conductor does not divide the polynomial conductor");
        coeffs.push_back(x.lift(c));
    }
    try {
        return CycPoly::explicit_poly(std::move(coeffs));
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
}

Monomial parse_monomial(const Json& j, const std::string& where, std::size_t size) {
    const auto& arr = expect_array(j, where);
    if (arr.size() != size) {
        fail(where, "expected " + std::to_string(size) + " exponents, got " + std::to_string(arr.size()));
    }
    Monomial m;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        m.exps.push_back(get_int(arr[i], where + "[" + std::to_string(i) + "]"));
    }
    return m;
}

Partition parse_partition(const Json& j, const std::string& where, std::size_t universe) {
    const auto& arr = expect_array(j, where);
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t b = 0; b < arr.size(); ++b) {
        const std::string wb = where + "[" + std::to_string(b) + "]";
        std::vector<std::size_t> block;
        for (const auto& e : expect_array(arr[b], wb)) {
            const auto v = get_int(e, wb);
            if (v < 0) fail(wb, "negative character index");
            block.push_back(static_cast<std::size_t>(v));
        }
        blocks.push_back(std::move(block));
    }
    try {
        return Partition(universe, std::move(blocks));
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

// --- writing ---------------------------------------------------------------

Json write_cycnum(const CycNum& x) {
    Json coeffs = Json::array();
    for (const auto& q : x.coeffs()) coeffs.push_back(q.get_str());
    return Json{{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

Json write_cycpoly(const CycPoly& p) {
    if (p.is_named()) return Json{{"kind", "named"}, {"n", p.index()}};
    const auto cs = p.coefficients();
    std::uint64_t c = 1;
    for (const auto& x : cs) c = lcm_conductor(c, x.conductor());
    Json coeffs = Json::array();
    for (const auto& x : cs) coeffs.push_back(write_cycnum(x.lift(c)));
    return Json{{"kind", "explicit"}, {"conductor", c}, {"coeffs", coeffs}};
}

Json write_partition(const Partition& p) {
    Json out = Json::array();
    for (const auto& b : p.blocks()) out.push_back(b);
    return out;
}

}  // namespace

DatasetSyntaxError::DatasetSyntaxError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

std::optional<std::size_t> GroupDataset::character_index(std::string_view id_or_name) const {
    for (std::size_t i = 0; i < characters.size(); ++i) {
        if (characters[i].id == id_or_name) return i;
    }
    for (std::size_t i = 0; i < characters.size(); ++i) {
        if (characters[i].name == id_or_name) return i;
    }
    return std::nullopt;
}

const SchurModel* GroupDataset::model_for(std::size_t character) const {
    const auto& id = characters.at(character).id;
    for (const auto& m : models) {
        if (m.character == id) return &m;
    }
    return nullptr;
}

const SchurModel& GroupDataset::require_model(std::size_t character) const {
    const SchurModel* m = model_for(character);
    if (m == nullptr) {
        throw IncompleteDataError("no Schur model for character " + characters.at(character).id);
    }
    return *m;
}

std::vector<Hyperplane> GroupDataset::hyperplanes() const {
    std::vector<Hyperplane> out = blocks.hyperplanes();
    for (auto& h : essential_hyperplanes(models, vars)) {
        if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
    }
    return out;
}

GroupDataset parse_dataset(std::string_view text) {
    Json root;
    try {
        root = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte);
        throw DatasetSyntaxError(line, col, e.what());
    }

    expect_keys(root, "dataset", {"group", "field", "orbits", "characters", "schur_models", "blocks"},
                {"appendix_rows"});
    GroupDataset ds;
    ds.group = get_string(root["group"], "group");

    expect_keys(root["field"], "field", {"conductor", "mu_order"});
    ds.field.conductor = get_positive(root["field"]["conductor"], "field.conductor");
    ds.field.mu_order = get_positive(root["field"]["mu_order"], "field.mu_order");

    std::vector<Orbit> orbits;
    for (std::size_t i = 0; const auto& o : expect_array(root["orbits"], "orbits")) {
        const std::string w = "orbits[" + std::to_string(i++) + "]";
        expect_keys(o, w, {"name", "order"});
        orbits.push_back({get_string(o["name"], w + ".name"), get_positive(o["order"], w + ".order")});
    }
    if (orbits.empty()) fail("orbits", "at least one orbit is required");
    ds.vars = VarIndex(std::move(orbits));
    const std::size_t total = ds.vars.total();

    for (std::size_t i = 0; const auto& c : expect_array(root["characters"], "characters")) {
        const std::string w = "characters[" + std::to_string(i++) + "]";
        expect_keys(c, w, {"id", "name", "degree"});
        Character ch{get_string(c["id"], w + ".id"), get_string(c["name"], w + ".name"),
                     static_cast<std::int64_t>(get_positive(c["degree"], w + ".degree"))};
        for (const auto& prev : ds.characters) {
            if (prev.id == ch.id) fail(w, "duplicate character id '" + ch.id + "'");
        }
        ds.characters.push_back(std::move(ch));
    }

    for (std::size_t i = 0; const auto& m : expect_array(root["schur_models"], "schur_models")) {
        const std::string w = "schur_models[" + std::to_string(i++) + "]";
        expect_keys(m, w, {"char", "coefficient", "leading", "factors"});
        SchurModel model;
        model.character = get_string(m["char"], w + ".char");
        if (!std::any_of(ds.characters.begin(), ds.characters.end(),
                         [&](const Character& c) { return c.id == model.character; })) {
            fail(w, "unknown character '" + model.character + "'");
        }
        if (std::any_of(ds.models.begin(), ds.models.end(),
                        [&](const SchurModel& s) { return s.character == model.character; })) {
            fail(w, "second model for character '" + model.character + "'");
        }
        model.coefficient = parse_cycnum(m["coefficient"], w + ".coefficient");
        model.leading = parse_monomial(m["leading"], w + ".leading", total);
        for (std::size_t k = 0; const auto& f : expect_array(m["factors"], w + ".factors")) {
            const std::string wf = w + ".factors[" + std::to_string(k++) + "]";
            expect_keys(f, wf, {"psi", "monomial", "mult"});
            model.factors.push_back({parse_cycpoly(f["psi"], wf + ".psi"),
                                     parse_monomial(f["monomial"], wf + ".monomial", total),
                                     get_int(f["mult"], wf + ".mult")});
        }
        if (const auto violations = validate_model(model, ds.vars); !violations.empty()) {
            fail(w, violations.front().message);
        }
        ds.models.push_back(std::move(model));
    }

    const std::size_t universe = ds.characters.size();
    const Json& blocks = root["blocks"];
    expect_keys(blocks, "blocks", {"no_hyperplane", "hyperplanes"});
    Partition none = parse_partition(blocks["no_hyperplane"], "blocks.no_hyperplane", universe);
    std::vector<HyperplaneBlocks> per;
    for (std::size_t i = 0; const auto& h : expect_array(blocks["hyperplanes"], "blocks.hyperplanes")) {
        const std::string w = "blocks.hyperplanes[" + std::to_string(i++) + "]";
        expect_keys(h, w, {"normal", "partition"});
        const Monomial normal = parse_monomial(h["normal"], w + ".normal", total);
        if (normal.is_zero()) fail(w + ".normal", "zero normal vector");
        per.push_back({make_hyperplane(normal, ds.vars),
                       parse_partition(h["partition"], w + ".partition", universe)});
    }
    try {
        ds.blocks = BlockData(std::move(none), std::move(per));
    } catch (const std::invalid_argument& e) {
        fail("blocks", e.what());
    }

    if (root.contains("appendix_rows")) {
        for (std::size_t i = 0; const auto& r : expect_array(root["appendix_rows"], "appendix_rows")) {
            const std::string w = "appendix_rows[" + std::to_string(i++) + "]";
            expect_keys(r, w, {"target", "index", "substitutions"}, {"restrictions"});
            AppendixRow row;
            row.target = get_string(r["target"], w + ".target");
            row.index = get_positive(r["index"], w + ".index");
            const auto& subs = expect_array(r["substitutions"], w + ".substitutions");
            if (subs.size() != total) {
                fail(w + ".substitutions", "expected one entry per slot (" + std::to_string(total) + ")");
            }
            for (std::size_t k = 0; k < subs.size(); ++k) {
                const std::string ws = w + ".substitutions[" + std::to_string(k) + "]";
                expect_keys(subs[k], ws, {"root"}, {"child_slot"});
                Substitution sub{parse_cycnum(subs[k]["root"], ws + ".root"), std::nullopt};
                if (!sub.root.is_root_of_unity()) fail(ws + ".root", "not a root of unity");
                if (subs[k].contains("child_slot")) {
                    const auto slot = get_int(subs[k]["child_slot"], ws + ".child_slot");
                    if (slot < 0) fail(ws + ".child_slot", "negative slot");
                    sub.child_slot = static_cast<std::size_t>(slot);
                }
                row.substitutions.push_back(std::move(sub));
            }
            if (r.contains("restrictions")) {
                for (std::size_t k = 0; const auto& x : expect_array(r["restrictions"], w + ".restrictions")) {
                    const std::string wr = w + ".restrictions[" + std::to_string(k++) + "]";
                    expect_keys(x, wr, {"parent", "child"});
                    Restriction res{get_string(x["parent"], wr + ".parent"), get_string(x["child"], wr + ".child")};
                    if (!std::any_of(ds.characters.begin(), ds.characters.end(),
                                     [&](const Character& c) { return c.id == res.parent; })) {
                        fail(wr, "unknown character '" + res.parent + "'");
                    }
                    row.restrictions.push_back(std::move(res));
                }
            }
            ds.appendix_rows.push_back(std::move(row));
        }
    }
    return ds;
}

GroupDataset load_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dataset(buf.str());
}

std::string serialize_dataset(const GroupDataset& ds) {
    Json root;
    root["group"] = ds.group;
    root["field"] = Json{{"conductor", ds.field.conductor}, {"mu_order", ds.field.mu_order}};
    Json orbits = Json::array();
    for (const auto& o : ds.vars.orbits()) orbits.push_back(Json{{"name", o.name}, {"order", o.order}});
    root["orbits"] = orbits;
    Json chars = Json::array();
    for (const auto& c : ds.characters) {
        chars.push_back(Json{{"id", c.id}, {"name", c.name}, {"degree", c.degree}});
    }
    root["characters"] = chars;
    Json models = Json::array();
    for (const auto& m : ds.models) {
        Json factors = Json::array();
        for (const auto& f : m.factors) {
            factors.push_back(Json{{"psi", write_cycpoly(f.psi)}, {"monomial", f.monomial.exps}, {"mult", f.mult}});
        }
        models.push_back(Json{{"char", m.character},
                              {"coefficient", write_cycnum(m.coefficient)},
                              {"leading", m.leading.exps},
                              {"factors", factors}});
    }
    root["schur_models"] = models;
    Json hyperplanes = Json::array();
    for (const auto& hb : ds.blocks.per_hyperplane()) {
        hyperplanes.push_back(Json{{"normal", hb.hyperplane.normal.exps}, {"partition", write_partition(hb.partition)}});
    }
    root["blocks"] = Json{{"no_hyperplane", write_partition(ds.blocks.no_hyperplane())},
                          {"hyperplanes", hyperplanes}};
    if (!ds.appendix_rows.empty()) {
        Json rows = Json::array();
        for (const auto& r : ds.appendix_rows) {
            Json subs = Json::array();
            for (const auto& s : r.substitutions) {
                Json e{{"root", write_cycnum(s.root)}};
                if (s.child_slot) e["child_slot"] = *s.child_slot;
                subs.push_back(e);
            }
            Json row{{"target", r.target}, {"index", r.index}, {"substitutions", subs}};
            if (!r.restrictions.empty()) {
                Json res = Json::array();
                for (const auto& x : r.restrictions) res.push_back(Json{{"parent", x.parent}, {"child", x.child}});
                row["restrictions"] = res;
            }
            rows.push_back(row);
        }
        root["appendix_rows"] = rows;
    }
    return root.dump(2) + "\n";
}

}  // namespace rouquier
