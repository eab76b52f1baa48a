// Command-line front end: compute and cross-verify characters of flagged
// Schur modules, classify diagrams, enumerate reduced words, and run the
// box-sweep verification harness.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "schub/character.hpp"
#include "schub/io.hpp"
#include "schub/oracle.hpp"
#include "schub/sweep.hpp"

namespace {

using namespace schub;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

struct CommonOpts {
    std::string diagram_spec;
    std::string rothe;
    std::string method = "auto";
    int nvars = 0;
    std::string rank_sequence;
    std::string format = "text";
    long long cap_fillings = Caps{}.max_fillings;
    long long cap_terms = Caps{}.max_terms;

    Caps caps() const { return Caps{cap_fillings, cap_terms}; }

    Diagram diagram() const {
        if (!rothe.empty()) return rothe_diagram(parse_permutation(rothe));
        return parse_diagram_spec(diagram_spec);
    }
};

void add_input_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--diagram", o.diagram_spec,
                    "diagram spec: column list, grid, rothe:<w>, repeat:<m>x<spec>");
    cmd->add_option("--rothe", o.rothe, "permutation whose Rothe diagram to use");
    cmd->add_option("--format", o.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
}

void add_cap_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--cap-fillings", o.cap_fillings, "max fillings per oracle instance");
    cmd->add_option("--cap-terms", o.cap_terms, "max expanded terms per product of minors");
}

long long dimension_int(const Polynomial& f) {
    const Int dim = f.evaluate_all_ones();
    return static_cast<long long>(dim);
}

int run_char(const CommonOpts& o) {
    const Diagram d = o.diagram();
    const Classification cls = classify(d);

    std::optional<RankSequence> rank_seq;
    if (!o.rank_sequence.empty()) rank_seq = parse_rank_sequence(o.rank_sequence);

    std::string method = o.method;
    if (method == "dd" && o.rothe.empty())
        throw parse_error("method dd requires a permutation input (--rothe)");
    if (rank_seq && !(method == "oracle"))
        throw parse_error("--rank-sequence is only valid with --method oracle");
    if (method == "auto") method = cls.translucent ? "recursion" : "oracle";

    const int n = std::max(o.nvars, d.max_row());
    CharacterResult result;
    if (method == "recursion") {
        result = character_recursive(d);
    } else if (method == "redwords") {
        result = character_via_reduced_words(d);
    } else if (method == "dd") {
        result = make_character_result(schubert_divided_difference(parse_permutation(o.rothe)),
                                       Method::divided_difference, d);
    } else if (method == "oracle") {
        FlagBound fb = rank_seq ? FlagBound::partial(*rank_seq) : FlagBound::standard(n);
        result = character_oracle(d, fb, o.caps());
    } else {
        throw parse_error("unknown method: " + method);
    }

    if (o.format == "json") {
        json out;
        out["diagram"] = diagram_to_json(d);
        out["method"] = method_name(result.method);
        out["character"] = polynomial_to_json(result.character, o.nvars);
        out["dimension"] = dimension_int(result.character);
        out["clear"] = cls.clear;
        out["transparent"] = cls.transparent;
        out["translucent"] = cls.translucent;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "diagram: " << column_list_string(d) << "\n"
                  << "clear: " << (cls.clear ? "yes" : "no")
                  << "  transparent: " << (cls.transparent ? "yes" : "no")
                  << "  translucent: " << (cls.translucent ? "yes" : "no") << "\n"
                  << "method: " << method_name(result.method) << "\n"
                  << "character: " << to_string(result.character) << "\n"
                  << "dimension: " << dimension_int(result.character) << "\n";
    }
    return kExitOk;
}

int run_classify(const CommonOpts& o) {
    const Diagram d = o.diagram();
    const Classification cls = classify(d);
    const auto descents = diagram_descents(d);

    if (o.format == "json") {
        json out;
        out["diagram"] = diagram_to_json(d);
        out["clear"] = cls.clear;
        out["transparent"] = cls.transparent;
        out["translucent"] = cls.translucent;
        json fullness = json::array();
        for (int k = 1; k <= d.max_row(); ++k)
            fullness.push_back(json{{"k", k}, {"full", is_k_full(d, k)}});
        out["k_full"] = fullness;
        json des = json::array();
        for (const auto& w : descents)
            des.push_back(json{{"k", w.k}, {"border_cell", {w.border_cell().first, w.border_cell().second}}});
        out["descents"] = des;
        std::cout << out.dump() << "\n";
        return kExitOk;
    }

    std::cout << "diagram: " << column_list_string(d) << "\n";
    if (!d.empty()) std::cout << grid_string(d) << "\n";
    std::cout << "clear: " << (cls.clear ? "yes" : "no") << "\n"
              << "transparent: " << (cls.transparent ? "yes" : "no") << "\n"
              << "translucent: " << (cls.translucent ? "yes" : "no") << "\n";
    for (int k = 1; k <= d.max_row(); ++k)
        std::cout << "k=" << k << ": " << (is_k_full(d, k) ? "full" : "not full") << "\n";
    std::cout << "descents:";
    for (const auto& w : descents)
        std::cout << " " << w.k << "(border cell (" << w.k << "," << (w.column_index + 1)
                  << "))";
    std::cout << "\n";
    return kExitOk;
}

int run_reduced_words(const CommonOpts& o, long long cap) {
    const Diagram d = o.diagram();
    if (!classify(d).transparent)
        throw not_transparent_error("reduced words require a transparent diagram");
    const auto words = reduced_words(d, Int(cap));

    if (o.format == "json") {
        json out;
        out["diagram"] = diagram_to_json(d);
        out["words"] = json::array();
        for (const auto& w : words) out["words"].push_back(w);
        out["count"] = words.size();
        std::cout << out.dump() << "\n";
        return kExitOk;
    }

    for (const auto& w : words) {
        std::cout << "(";
        for (size_t i = 0; i < w.size(); ++i) std::cout << (i ? "," : "") << w[i];
        std::cout << ")\n";
    }
    std::cout << "count: " << words.size() << "\n";
    return kExitOk;
}

int run_rothe(const std::string& perm, const std::string& format) {
    const Diagram d = rothe_diagram(parse_permutation(perm));
    if (format == "json") {
        json out;
        out["permutation"] = parse_permutation(perm).word();
        out["diagram"] = diagram_to_json(d);
        std::cout << out.dump() << "\n";
        return kExitOk;
    }
    std::cout << "diagram: " << column_list_string(d) << "\n";
    if (!d.empty()) std::cout << grid_string(d) << "\n";
    return kExitOk;
}

struct VerifyStats {
    int diagrams = 0;
    int translucent_checked = 0;
    int identity_checked = 0;
    int trimming_checked = 0;
    int dd_law_holds = 0;
    int dd_law_fails = 0; // expected-negative for general diagrams
    int skipped = 0;
    std::vector<std::string> failures;
};

std::string repro(const Diagram& d, const std::string& method) {
    return "schubchar char --diagram \"" + column_list_string(d) + "\" --method " + method;
}

void verify_one(const Diagram& d, const Caps& caps, VerifyStats& stats) {
    ++stats.diagrams;
    const Classification cls = classify(d);
    const int n = std::max(1, d.max_row());

    Polynomial oracle_char;
    try {
        oracle_char = character_oracle(d, FlagBound::standard(n), caps).character;
    } catch (const too_large_error&) {
        ++stats.skipped;
        return;
    }

    const auto oracle_of = [&](const Diagram& dd) {
        return character_oracle(dd, FlagBound::standard(std::max(1, dd.max_row())), caps)
            .character;
    };

    if (cls.translucent) {
        ++stats.translucent_checked;
        if (character_recursive(d).character != oracle_char)
            stats.failures.push_back("recursion != oracle: " + repro(d, "recursion"));
    }

    if (cls.clear) {
        ++stats.identity_checked;
        try {
            if (!verify_recursion_identity(d, oracle_of))
                stats.failures.push_back("descent recursion identity failed: " +
                                         repro(d, "oracle"));
        } catch (const too_large_error&) {
            ++stats.skipped;
        }
    }

    // The trimming laws are guaranteed on clear diagrams only; the naive
    // divided-difference law is recorded as informational either way.
    if (!cls.clear) return;
    try {
        for (const auto& wtn : diagram_descents(d)) {
            ++stats.trimming_checked;
            const Polynomial sub = oracle_of(apply_s_k(d, wtn.k));
            if (trimming(oracle_char, wtn.k) != bergeron_sottile(sub, wtn.k + 1))
                stats.failures.push_back("trimming law failed at k=" + std::to_string(wtn.k) +
                                         ": " + repro(d, "oracle"));
            if (divided_difference(oracle_char, wtn.k) == sub)
                ++stats.dd_law_holds;
            else
                ++stats.dd_law_fails;
        }
        for (int k = 1; k <= d.max_row(); ++k) {
            if (!is_k_full(d, k)) continue;
            ++stats.trimming_checked;
            if (!trimming(oracle_char, k).is_zero())
                stats.failures.push_back("trimming law (k-full) failed at k=" +
                                         std::to_string(k) + ": " + repro(d, "oracle"));
        }
    } catch (const too_large_error&) {
        ++stats.skipped;
    }
}

int run_verify(int box_rows, int box_cols, int max_mult, const std::string& only,
               const Caps& caps) {
    VerifyStats stats;
    if (only == "rothe") {
        for (const auto& w : all_permutations(box_rows)) {
            const Diagram d = rothe_diagram(w);
            verify_one(d, caps, stats);
            const Polynomial rec = character_recursive(d).character;
            const Polynomial dd = schubert_divided_difference(w);
            const Polynomial nst = schubert_nst(w);
            if (rec != dd || rec != nst)
                stats.failures.push_back("Schubert methods disagree for w with diagram " +
                                         column_list_string(d));
            // On Rothe diagrams the divided-difference law must hold.
            for (int k : w.descents()) {
                if (divided_difference(rec, k) !=
                    character_recursive(rothe_diagram(w.times_s(k))).character)
                    stats.failures.push_back("divided-difference law failed on Rothe diagram " +
                                             column_list_string(d));
            }
        }
    } else {
        for (const auto& d : enumerate_box_diagrams(box_rows, box_cols, max_mult))
            verify_one(d, caps, stats);
    }

    std::cout << "diagrams checked: " << stats.diagrams << "\n"
              << "translucent (recursion vs oracle): " << stats.translucent_checked << "\n"
              << "descent recursion identities: " << stats.identity_checked << "\n"
              << "trimming law checks: " << stats.trimming_checked << "\n"
              << "divided-difference law holds/fails (informational): " << stats.dd_law_holds
              << "/" << stats.dd_law_fails << "\n"
              << "instances skipped (over caps): " << stats.skipped << "\n";
    if (!stats.failures.empty()) {
        std::cout << "FAILURES:\n";
        for (const auto& f : stats.failures) std::cout << "  " << f << "\n";
        return kExitVerifyFailure;
    }
    std::cout << "all checks passed\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact characters of flagged Schur modules and Schubert polynomials"};
    app.require_subcommand(1);

    CommonOpts char_opts;
    CLI::App* cmd_char = app.add_subcommand("char", "compute the character of a diagram");
    add_input_flags(cmd_char, char_opts);
    add_cap_flags(cmd_char, char_opts);
    cmd_char->add_option("--method", char_opts.method,
                         "recursion | redwords | dd | oracle | auto")
        ->check(CLI::IsMember({"recursion", "redwords", "dd", "oracle", "auto"}));
    cmd_char->add_option("--nvars", char_opts.nvars, "number of variables (default: max row)");
    cmd_char->add_option("--rank-sequence", char_opts.rank_sequence,
                         "partial flag ranks, e.g. \"1,2,5,6,7\" (oracle only)");

    CommonOpts classify_opts;
    CLI::App* cmd_classify = app.add_subcommand("classify", "classify a diagram");
    add_input_flags(cmd_classify, classify_opts);

    CommonOpts words_opts;
    long long words_cap = 100000;
    CLI::App* cmd_words = app.add_subcommand("reduced-words", "enumerate reduced words");
    add_input_flags(cmd_words, words_opts);
    cmd_words->add_option("--cap", words_cap, "maximum number of words to enumerate");

    std::string rothe_perm;
    std::string rothe_format = "text";
    CLI::App* cmd_rothe = app.add_subcommand("rothe", "print the Rothe diagram of w");
    cmd_rothe->add_option("permutation", rothe_perm, "one-line permutation")->required();
    cmd_rothe->add_option("--format", rothe_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CommonOpts verify_opts;
    std::string box = "3x3";
    int max_mult = 1;
    std::string only = "all";
    CLI::App* cmd_verify = app.add_subcommand("verify", "run the sweep harness");
    cmd_verify->add_option("--box", box, "box size RxC (rows x max distinct columns)");
    cmd_verify->add_option("--max-mult", max_mult, "max multiplicity per distinct column");
    cmd_verify->add_option("--only", only, "all | rothe")
        ->check(CLI::IsMember({"all", "rothe"}));
    add_cap_flags(cmd_verify, verify_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_char->parsed()) {
            if (!cmd_char->count("--diagram") && !cmd_char->count("--rothe"))
                throw parse_error("char requires --diagram or --rothe");
            return run_char(char_opts);
        }
        if (cmd_classify->parsed()) {
            if (!cmd_classify->count("--diagram") && !cmd_classify->count("--rothe"))
                throw parse_error("classify requires --diagram or --rothe");
            return run_classify(classify_opts);
        }
        if (cmd_words->parsed()) {
            if (!cmd_words->count("--diagram") && !cmd_words->count("--rothe"))
                throw parse_error("reduced-words requires --diagram or --rothe");
            return run_reduced_words(words_opts, words_cap);
        }
        if (cmd_rothe->parsed()) return run_rothe(rothe_perm, rothe_format);
        if (cmd_verify->parsed()) {
            const size_t x = box.find('x');
            if (x == std::string::npos) throw parse_error("--box must look like 4x4");
            const int rows = std::stoi(box.substr(0, x));
            const int cols = std::stoi(box.substr(x + 1));
            if (rows < 1 || rows > 8 || cols < 1)
                throw parse_error("box rows must be in 1..8");
            return run_verify(rows, cols, max_mult, only, verify_opts.caps());
        }
    } catch (const too_large_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const cap_exceeded_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailure;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
