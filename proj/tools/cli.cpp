#include "cli.hpp"

#include <CLI/CLI.hpp>

#include <charconv>
#include <optional>
#include <ostream>
#include <sstream>

#include "rouquier/appendix.hpp"
#include "rouquier/dataset.hpp"
#include "rouquier/essential.hpp"
#include "rouquier/specialization.hpp"
#include "rouquier/verifier.hpp"

namespace rouquier::cli {
namespace {

constexpr int exit_ok = 0;
constexpr int exit_false = 1;
constexpr int exit_input = 2;

// Thrown for malformed arguments; reported with exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::int64_t v = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (first == last || ec != std::errc() || ptr != last) {
            throw InputError(what + ": expected comma-separated integers, got \"" + text + "\"");
        }
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

Specialization parse_spec(const std::string& text, const GroupDataset& ds) {
    Specialization s(parse_int_list(text, "--spec"));
    if (s.size() != ds.vars.total()) {
        throw InputError("--spec has " + std::to_string(s.size()) + " entries; " + ds.group + " has " +
                         std::to_string(ds.vars.total()) + " parameters");
    }
    return s;
}

std::size_t find_character(const GroupDataset& ds, const std::string& name) {
    if (auto i = ds.character_index(name)) return *i;
    throw InputError("unknown character '" + name + "' in " + ds.group);
}

std::string block_text(const GroupDataset& ds, const std::vector<std::size_t>& block) {
    std::string s = "{";
    for (std::size_t k = 0; k < block.size(); ++k) {
        if (k) s += ", ";
        s += ds.characters[block[k]].name;
    }
    return s + "}";
}

std::string partition_text(const GroupDataset& ds, const Partition& p) {
    std::string s;
    for (const auto& b : p.blocks()) {
        if (!s.empty()) s += ' ';
        s += block_text(ds, b);
    }
    return s;
}

std::string vector_text(const std::vector<std::int64_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + "]";
}

// A label as printed by `essential`, "none", or a comma-separated normal.
TheoremFilter parse_hyperplane_filter(const std::string& text, const GroupDataset& ds) {
    TheoremFilter f;
    if (text == "none") {
        f.only_no_hyperplane = true;
        return f;
    }
    for (const auto& h : ds.hyperplanes()) {
        if (h.label == text) {
            f.hyperplane = h;
            return f;
        }
    }
    Monomial normal{parse_int_list(text, "--hyperplane")};
    if (normal.size() != ds.vars.total() || normal.is_zero()) {
        throw InputError("--hyperplane: no hyperplane \"" + text + "\" in " + ds.group);
    }
    f.hyperplane = make_hyperplane(normal, ds.vars);
    return f;
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    try {
        const GroupDataset ds = load_dataset(path);
        out << "ok: " << ds.group << " (" << ds.characters.size() << " characters, " << ds.models.size()
            << " models, " << ds.blocks.per_hyperplane().size() << " hyperplanes with blocks)\n";
        return exit_ok;
    } catch (const DatasetSemanticError& e) {
        err << "invalid: " << e.what() << '\n';
        return exit_false;
    }
}

int cmd_aA(const std::string& path, const std::string& chr, const std::string& spec, std::ostream& out) {
    const GroupDataset ds = load_dataset(path);
    const auto r = compute_aA(ds.require_model(find_character(ds, chr)), parse_spec(spec, ds));
    out << "a=" << r.a << " A=" << r.A << '\n';
    return exit_ok;
}

int cmd_expand(const std::string& path, const std::string& chr, const std::string& spec, std::ostream& out) {
    const GroupDataset ds = load_dataset(path);
    out << expand(ds.require_model(find_character(ds, chr)), parse_spec(spec, ds)).to_string() << '\n';
    return exit_ok;
}

int cmd_essential(const std::string& path, std::ostream& out) {
    const GroupDataset ds = load_dataset(path);
    if (ds.is_partial()) {
        out << "partial (" << ds.models.size() << " of " << ds.characters.size() << " characters)\n";
    }
    for (const auto& e : essential_monomials(ds.models)) {
        out << vector_text(e.monomial.exps) << "  " << hyperplane_label(e.monomial, ds.vars) << "  primes ";
        if (e.every_prime) {
            out << "all";
        } else {
            std::string sep;
            for (auto p : e.primes) {
                out << sep << p;
                sep = ",";
            }
        }
        out << "  characters ";
        std::vector<std::size_t> chars;
        for (const auto& w : e.witnesses) {
            const auto c = *ds.character_index(ds.models[w.model].character);
            if (std::find(chars.begin(), chars.end(), c) == chars.end()) chars.push_back(c);
        }
        out << block_text(ds, chars) << '\n';
    }
    return exit_ok;
}

int cmd_blocks(const std::string& path, const std::string& spec, std::ostream& out) {
    const GroupDataset ds = load_dataset(path);
    const auto hs = ds.hyperplanes();
    const auto rb = rouquier_blocks(parse_spec(spec, ds), ds.blocks, hs);
    if (rb.containing.empty()) {
        out << "hyperplanes: none\n";
    } else {
        for (const auto& h : rb.containing) out << "hyperplane: " << h.label << '\n';
    }
    out << "blocks: " << partition_text(ds, rb.partition) << '\n';
    return exit_ok;
}

int cmd_verify(const std::string& path, const std::optional<std::string>& hyperplane,
               const std::optional<std::size_t>& block, std::ostream& out) {
    const GroupDataset ds = load_dataset(path);
    TheoremFilter filter = hyperplane ? parse_hyperplane_filter(*hyperplane, ds) : TheoremFilter{};
    filter.block = block;
    const auto report = check_theorem(ds, filter);
    for (const auto& e : report.entries) {
        out << '(' << (e.hyperplane ? e.hyperplane->label : "none") << "; " << block_text(ds, e.block) << "; "
            << (e.verdict ? "true" : "false") << ")\n";
    }
    out << "verdict: " << (report.ok() ? "true" : "false") << '\n';
    return report.ok() ? exit_ok : exit_false;
}

int cmd_check_sum(const std::string& path, const std::string& spec, std::ostream& out) {
    const GroupDataset ds = load_dataset(path);
    const auto report = check_aA_sum(ds, parse_spec(spec, ds));
    for (const auto& e : report.entries) {
        out << block_text(ds, e.block) << ": a+A =";
        for (const auto& v : e.values) {
            out << ' ' << (v ? std::to_string(v->a + v->A) : std::string("?"));
        }
        out << (e.constant_sum ? "  constant\n" : "  NOT constant\n");
    }
    out << "verdict: " << (report.ok() ? "true" : "false") << '\n';
    return report.ok() ? exit_ok : exit_false;
}

int cmd_check_index(const std::string& parent_path, const std::string& child_path, std::size_t row,
                    const std::optional<std::string>& spec, std::ostream& out) {
    const GroupDataset parent = load_dataset(parent_path);
    const GroupDataset child = load_dataset(child_path);
    std::optional<Specialization> cs;
    if (spec) cs = parse_spec(*spec, child);
    const auto report = check_index(parent, child, row, cs);
    for (const auto& c : report.checks) {
        out << parent.characters[c.parent_character].name << " -> " << child.characters[c.child_character].name
            << ": " << (c.holds ? "holds" : "fails") << '\n';
    }
    out << "verdict: " << (report.ok() ? "true" : "false") << '\n';
    return report.ok() ? exit_ok : exit_false;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schur elements, a/A functions and Rouquier blocks of cyclotomic Hecke algebras", "rouquier"};
    app.require_subcommand(1);

    std::string file, parent, child, chr, spec;
    std::optional<std::string> hyperplane, index_spec;
    std::optional<std::size_t> block;
    std::size_t row = 0;

    auto* validate = app.add_subcommand("validate", "Parse and validate a dataset");
    validate->add_option("file", file, "Dataset file")->required();

    auto* aA = app.add_subcommand("aA", "Valuation a and degree A of a specialized Schur element");
    aA->add_option("file", file, "Dataset file")->required();
    aA->add_option("--char", chr, "Character id or name")->required();
    aA->add_option("--spec", spec, "Exponents n_1,...,n_k")->required();

    auto* exp = app.add_subcommand("expand", "Specialized Schur element as a Laurent polynomial in y");
    exp->add_option("file", file, "Dataset file")->required();
    exp->add_option("--char", chr, "Character id or name")->required();
    exp->add_option("--spec", spec, "Exponents n_1,...,n_k")->required();

    auto* essential = app.add_subcommand("essential", "Essential monomials, their primes and hyperplanes");
    essential->add_option("file", file, "Dataset file")->required();

    auto* blocks = app.add_subcommand("blocks", "Rouquier blocks for a specialization");
    blocks->add_option("file", file, "Dataset file")->required();
    blocks->add_option("--spec", spec, "Exponents n_1,...,n_k")->required();

    auto* verify = app.add_subcommand("verify", "Check that a and A are constant on every stored block");
    verify->add_option("file", file, "Dataset file")->required();
    verify->add_option("--hyperplane", hyperplane, "Hyperplane label, comma-separated normal, or 'none'");
    verify->add_option("--block", block, "Position of the block within its partition");

    auto* sum = app.add_subcommand("check-sum", "Check that a+A is constant on the Rouquier blocks");
    sum->add_option("file", file, "Dataset file")->required();
    sum->add_option("--spec", spec, "Exponents n_1,...,n_k")->required();

    auto* index = app.add_subcommand("check-index", "Check a parameter-substitution row against a child dataset");
    index->add_option("parent", parent, "Parent dataset file")->required();
    index->add_option("child", child, "Child dataset file")->required();
    index->add_option("--row", row, "Row of the parent's substitution table")->required();
    index->add_option("--spec", index_spec, "Child exponents (default: a separating choice)");

    // CLI11 expects argv order, last argument first.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_input;
    }

    try {
        if (*validate) return cmd_validate(file, out, err);
        if (*aA) return cmd_aA(file, chr, spec, out);
        if (*exp) return cmd_expand(file, chr, spec, out);
        if (*essential) return cmd_essential(file, out);
        if (*blocks) return cmd_blocks(file, spec, out);
        if (*verify) return cmd_verify(file, hyperplane, block, out);
        if (*sum) return cmd_check_sum(file, spec, out);
        if (*index) return cmd_check_index(parent, child, row, index_spec, out);
    } catch (const DatasetSyntaxError& e) {
        err << "syntax error at line " << e.line() << ", column " << e.column() << ": " << e.what() << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
    err << app.help();
    return exit_input;
}

}  // namespace rouquier::cli
