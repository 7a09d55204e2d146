#include "tcalc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "tcalc/char_sets.hpp"
#include "tcalc/cw.hpp"
#include "tcalc/json_io.hpp"
#include "tcalc/lambda_coeffs.hpp"
#include "tcalc/tc_series.hpp"
#include "tcalc/zcl.hpp"

namespace tcalc {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string prime_set_text(const std::vector<std::uint64_t>& primes) {
    std::string s = "{";
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(primes[i]);
    }
    return s + "}";
}

std::string prime_set_text(const std::set<std::uint64_t>& primes) {
    return prime_set_text(std::vector<std::uint64_t>(primes.begin(), primes.end()));
}

// Shared output plumbing: every subcommand fills a payload and, for text
// mode, a human rendering.
struct Emit {
    std::string format = "json";
    std::string command;
    Json inputs = Json::object();
    Json provenance = Json::array();
    Json result = Json::object();
    std::string text;

    void write(std::ostream& out) const {
        if (format == "text") {
            out << text;
        } else {
            out << dump_json(envelope(command, inputs, result, provenance));
        }
    }
};

void add_format_flag(CLI::App* cmd, std::string& format, const std::string& fallback) {
    format = fallback;
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

Json factor_json(const std::map<std::uint64_t, int>& factors) {
    Json a = Json::array();
    for (const auto& [p, e] : factors) a.push_back(Json::array({p, e}));
    return a;
}

// ---- lambda ----------------------------------------------------------

struct LambdaOpts {
    long k = 2;
    long n = 3;
    bool factor = false;
    bool show_lemma2_form = false;
    std::string format;
};

void run_lambda(const LambdaOpts& o, Emit& e) {
    e.command = "lambda";
    e.provenance = Json::array({"Lemma 2", "Table 1"});
    e.inputs = Json{{"k", o.k}, {"n", o.n}};
    Int value = lambda_nk(o.n, o.k);
    e.result["value"] = int_str(value);
    std::ostringstream text;
    text << "lambda(" << o.n << "," << o.k << ") = " << value << "\n";
    if (o.k % 2 != 0) {
        e.result["note"] = "odd k";
        text << "note: odd k\n";
    }
    if (o.factor) {
        LambdaFactorization f = factor_lambda(o.k);
        e.result["factorization"] = Json{{"factors", factor_json(f.factors)},
                                         {"rendering", format_factorization(f.factors)},
                                         {"support", f.support}};
        text << "factorization: " << (f.value < 0 ? "-" : "") << format_factorization(f.factors)
             << "\n";
    }
    if (o.show_lemma2_form) {
        Int display = lemma2_display_value(o.k);
        Int alternating = lambda3(o.k);
        e.result["lemma2_form"] = Json{{"display_value", int_str(display)},
                                       {"alternating_value", int_str(alternating)},
                                       {"agrees", display == alternating}};
        text << "boxed-form value: " << display << " (alternating sum: " << alternating
             << ", agrees: " << (display == alternating ? "yes" : "no") << ")\n";
    }
    e.text = text.str();
}

// ---- lambda-table / table1 -------------------------------------------

void run_lambda_table(long max_k, bool paper_layout, Emit& e) {
    e.command = paper_layout ? "table1" : "lambda-table";
    e.provenance = Json::array({"Table 1"});
    e.inputs = Json{{"max", max_k}};
    Json rows = Json::array();
    std::ostringstream text;
    for (const auto& row : table1_rows(max_k)) {
        std::vector<std::uint64_t> support(row.support.begin(), row.support.end());
        rows.push_back(Json{{"k", row.k},
                            {"value", int_str(row.value)},
                            {"factorization", format_factorization(row.factors)},
                            {"factors", factor_json(row.factors)},
                            {"support", support}});
        text << "k = " << row.k << ": " << prime_set_text(support) << "   (lambda = "
             << row.value << " = " << (row.value < 0 ? "-" : "")
             << format_factorization(row.factors) << ")\n";
    }
    e.result["rows"] = rows;
    e.text = text.str();
}

// ---- zcl-witness ------------------------------------------------------

struct WitnessOpts {
    int n = 3;
    int k = 2;
    std::uint64_t characteristic = 0;
    int r = 2;
    std::string route = "auto";
    std::size_t max_terms = 10'000'000;
    std::string format;
};

void run_witness(const WitnessOpts& o, Emit& e) {
    e.command = "zcl-witness";
    e.provenance = Json::array({"Proposition 2"});
    e.inputs = Json{{"n", o.n},       {"k", o.k},           {"char", o.characteristic},
                    {"r", o.r},       {"route", o.route},   {"max_terms", o.max_terms}};
    TruncatedAlgebra algebra =
        make_algebra(o.r, o.k, make_field(o.characteristic), o.max_terms);
    WitnessCertificate cert = zcl_witness(o.n, algebra, o.route);
    e.result = certificate_to_json(cert);
    std::ostringstream text;
    text << "witness route " << cert.route << ", length " << cert.witness_length << ": product "
         << (cert.product_nonzero ? "nonzero" : "zero") << " over "
         << (o.characteristic == 0 ? std::string("Q")
                                   : "F_" + std::to_string(o.characteristic))
         << "\n"
         << "top coefficient " << cert.top_coefficient << ", closed-form prediction "
         << cert.predicted_integer << (cert.routes_agree ? " (agrees)" : " (disagrees)") << "\n";
    e.text = text.str();
}

// ---- verify-lemma2 ----------------------------------------------------

void run_verify_lemma2(int max_n, int max_k, std::size_t max_terms, Emit& e) {
    e.command = "verify-lemma2";
    e.provenance = Json::array({"Lemma 2"});
    e.inputs = Json{{"max_n", max_n}, {"max_k", max_k}};
    if (max_n < 3 || max_k < 2) throw DomainError("need max_n >= 3 and max_k >= 2");

    Json identities = Json::array();
    std::ostringstream text;
    bool all_pass = true;
    const auto record = [&](const std::string& name, int n, int k, bool pass,
                            const std::string& expected, const std::string& actual) {
        identities.push_back(Json{{"name", name},
                                  {"n", n},
                                  {"k", k},
                                  {"pass", pass},
                                  {"expected", expected},
                                  {"actual", actual}});
        all_pass = all_pass && pass;
        text << (pass ? "PASS " : "FAIL ") << name << "  [n=" << n << ", k=" << k << "]";
        if (!pass) text << "  expected " << expected << ", got " << actual;
        text << "\n";
    };

    for (int k = 2; k <= max_k; ++k) {
        TruncatedAlgebra algebra = make_algebra(2, k, make_field(0), max_terms);
        for (int n = 3; n <= max_n; ++n) {
            TensorElement x = xi(n, algebra);
            if (k % 2 == 0) {
                Int lam = lambda_nk(n, k);
                TensorElement expected = TensorElement::zero(algebra, n);
                expected.set_term(Exponents(n, k), Rat(lam));
                record("xi equals lambda * top class", n, k, x == expected, int_str(lam),
                       rat_str(x.coefficient_at(Exponents(n, k))));
            } else {
                record("xi vanishes for odd k", n, k, x.is_zero(), "0",
                       x.is_zero() ? "0" : rat_str(x.coefficient_at(Exponents(n, k))));
                Int lam = 2 * lambda3(k - 1);
                if (n % 2 == 0) lam = -lam;
                TensorElement lhs =
                    mu(n, algebra) * (TensorElement::basis_class(algebra, n, 1) -
                                      TensorElement::basis_class(algebra, n, n));
                TensorElement expected = TensorElement::zero(algebra, n);
                expected.set_term(Exponents(n, k), Rat(lam));
                record("mu * (A1 - An) equals 2(-1)^(n-1) lambda3(k-1) * top class", n, k,
                       lhs == expected, int_str(lam),
                       rat_str(lhs.coefficient_at(Exponents(n, k))));
            }
            // lambda(n+1,k) = (-1)^k lambda(n,k), both sides read off xi.
            if (n + 1 <= max_n) {
                Rat left = xi(n + 1, algebra).coefficient_at(Exponents(n + 1, k));
                Rat right = x.coefficient_at(Exponents(n, k));
                if (k % 2 != 0) right = -right;
                record("lambda recursion in n", n, k, left == right, rat_str(right),
                       rat_str(left));
            }
        }
    }
    e.result = Json{{"identities", identities}, {"all_pass", all_pass}};
    text << (all_pass ? "all identities hold\n" : "some identities fail\n");
    e.text = text.str();
}

// ---- char-sets --------------------------------------------------------

void run_char_sets(const std::string& input_path, Emit& e) {
    e.command = "char-sets";
    e.provenance = Json::array({"Lemma 1", "Proposition 2"});
    e.inputs = Json{{"input", input_path}};
    CohomologyData data = parse_cohomology_input(read_file(input_path));
    auto [tag, set] = admissible_characteristics(data);
    std::uint64_t selected = select_prop1_characteristic(data);
    e.result = Json{{"case", tag},
                    {"includes_zero", set.includes_zero},
                    {"excluded", set.excluded},
                    {"selected_characteristic", selected},
                    {"echo", cohomology_to_json(data)}};
    std::ostringstream text;
    text << "case " << tag << ": excluded primes " << prime_set_text(set.excluded)
         << (set.includes_zero ? ", characteristic 0 admissible" : ", characteristic 0 excluded")
         << "\nselected characteristic: " << selected << "\n";
    e.text = text.str();
}

// ---- tcgen ------------------------------------------------------------

void run_tcgen(long k, long m, int expand, Emit& e) {
    e.command = "tcgen";
    e.provenance = Json::array({"Conjecture 1"});
    e.inputs = Json{{"k", k}, {"m", m}, {"expand", expand}};
    TCSequence seq = tc_sequence_for_condition1(k, m);
    NumeratorPolynomial p = generating_polynomial(seq);
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients) coeffs.push_back(int_str(c));
    std::ostringstream rendering;
    bool first = true;
    for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
        const Int& c = p.coefficients[i];
        if (c == 0) continue;
        if (!first) rendering << (c > 0 ? " + " : " - ");
        if (first && c < 0) rendering << "-";
        Int a = c < 0 ? Int(-c) : c;
        if (a != 1 || i == 0) rendering << a;
        if (i >= 1) rendering << "x";
        if (i >= 2) rendering << "^" << i;
        first = false;
    }
    if (first) rendering << "0";
    e.result = Json{{"numerator_coefficients", coeffs},
                    {"numerator", rendering.str()},
                    {"p_at_one", int_str(numerator_at_one(p))},
                    {"eventual_slope", int_str(seq.slope)}};
    std::ostringstream text;
    text << "P(x) = " << rendering.str() << "\n"
         << "P(1) = " << numerator_at_one(p) << " (eventual slope " << seq.slope << ")\n";
    if (expand > 0) {
        Json series = Json::array();
        std::vector<Int> g = series_expand(p, expand);
        text << "series:";
        for (const auto& c : g) {
            series.push_back(int_str(c));
            text << " " << c;
        }
        text << "\n";
        e.result["series"] = series;
    }
    e.text = text.str();
}

// ---- cw-build / cw-check ---------------------------------------------

void run_cw_build(const std::string& input_path, const std::string& relators, int alpha_boost,
                  Emit& e) {
    e.command = "cw-build";
    e.provenance = Json::array({"Theorem 4", "Theorem 5.1"});
    e.inputs = Json{{"input", input_path}, {"relators", relators}, {"alpha_boost", alpha_boost}};
    CohomologyData data = parse_cohomology_input(read_file(input_path));
    CellStructure cs = synthesize_cell_structure(data, relators, alpha_boost);
    e.result = structure_to_json(cs);
    std::ostringstream text;
    text << "case " << cs.case_tag << " structure, " << cs.cells.size() << " cells:\n";
    for (const auto& c : cs.cells) {
        text << "  e^" << c.dimension << " " << c.role;
        if (c.role == "relator") {
            text << " (boundary multiplicity " << c.boundary_multiplicity << ")";
        }
        if (c.has_hopf) text << " (hopf invariant " << c.hopf_invariant << ")";
        text << "\n";
    }
    for (const auto& n : cs.notes) text << "note: " << n << "\n";
    e.text = text.str();
}

void run_cw_check(const std::string& structure_path, std::uint64_t characteristic, Emit& e) {
    e.command = "cw-check";
    e.provenance = Json::array({"Theorem 2", "Theorem 4"});
    e.inputs = Json{{"structure", structure_path}, {"char", characteristic}};
    CellStructure cs = parse_cell_structure(read_file(structure_path));
    CohomologyReport rep = cellular_cohomology(cs, make_field(characteristic));
    e.result = report_to_json(rep);
    std::ostringstream text;
    text << "H^* dims over "
         << (characteristic == 0 ? std::string("Q") : "F_" + std::to_string(characteristic))
         << ":";
    for (long d : rep.dims) text << " " << d;
    text << "\nprofile match: " << (rep.profile_match ? "yes" : "no") << "\nspine product "
         << rep.spine_product << " is " << (rep.unit_check ? "a unit" : "not a unit") << "\n";
    e.text = text.str();
}

// ---- table2 -----------------------------------------------------------

void run_table2(int r, const std::string& k_list, Emit& e) {
    e.command = "table2";
    e.provenance = Json::array({"Table 2"});
    e.inputs = Json{{"r", r}, {"k_list", k_list}};
    std::vector<int> ks;
    std::stringstream ss(k_list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            ks.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw DomainError("bad k-list entry '" + item + "'");
        }
    }
    if (ks.empty()) throw DomainError("empty k-list");
    Json rows = Json::array();
    std::ostringstream text;
    for (int k : ks) {
        auto excluded = excluded_characteristics(r, k);
        rows.push_back(Json{{"k", k}, {"excluded", excluded}});
        text << "k = " << k << ": " << prime_set_text(excluded) << "\n";
    }
    e.result["rows"] = rows;
    e.text = text.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact-arithmetic toolkit for truncated-polynomial cohomology: zero-divisor "
                 "cup-length witnesses, coefficient tables, admissible characteristics, "
                 "TC generating functions and minimal cell structures"};
    app.require_subcommand(1);

    Emit e;

    LambdaOpts lo;
    auto* lambda_cmd = app.add_subcommand("lambda", "Alternating cubed-binomial coefficient");
    lambda_cmd->add_option("--k", lo.k, "Nilpotency index")->required();
    lambda_cmd->add_option("--n", lo.n, "Tensor arity (sign only)")->check(CLI::Range(2L, 1000L));
    lambda_cmd->add_flag("--factor", lo.factor, "Include the prime factorization (even k)");
    lambda_cmd->add_flag("--show-lemma2-form", lo.show_lemma2_form,
                         "Also evaluate the published boxed reformulation (even k)");
    add_format_flag(lambda_cmd, lo.format, "json");

    long table_max = 40;
    auto* lambda_table_cmd = app.add_subcommand("lambda-table", "Coefficient table for even k");
    lambda_table_cmd->add_option("--max", table_max, "Largest k")->capture_default_str();
    std::string lambda_table_format;
    add_format_flag(lambda_table_cmd, lambda_table_format, "json");

    long table1_max = 40;
    auto* table1_cmd = app.add_subcommand("table1", "Prime-support table, publication layout");
    table1_cmd->add_option("--max", table1_max, "Largest k")->capture_default_str();
    std::string table1_format;
    add_format_flag(table1_cmd, table1_format, "text");

    WitnessOpts wo;
    auto* witness_cmd = app.add_subcommand("zcl-witness", "Zero-divisor cup-length certificate");
    witness_cmd->add_option("--n", wo.n, "Tensor arity")->required()->check(CLI::Range(2, 64));
    witness_cmd->add_option("--k", wo.k, "Nilpotency index")->required()->check(CLI::Range(2, 64));
    witness_cmd->add_option("--char", wo.characteristic, "Field characteristic (0 or prime)")
        ->capture_default_str();
    witness_cmd->add_option("--r", wo.r, "Generator degree (even)")->capture_default_str();
    witness_cmd->add_option("--route", wo.route, "Witness family")
        ->check(CLI::IsMember({"auto", "square", "xi", "mu"}))
        ->capture_default_str();
    witness_cmd->add_option("--max-terms", wo.max_terms, "Term budget")->capture_default_str();
    add_format_flag(witness_cmd, wo.format, "json");

    int vl_max_n = 5, vl_max_k = 6;
    std::size_t vl_max_terms = 10'000'000;
    auto* verify_cmd = app.add_subcommand("verify-lemma2", "Check the product identities");
    verify_cmd->add_option("--max-n", vl_max_n, "Largest arity")->capture_default_str();
    verify_cmd->add_option("--max-k", vl_max_k, "Largest nilpotency index")->capture_default_str();
    verify_cmd->add_option("--max-terms", vl_max_terms, "Term budget")->capture_default_str();
    std::string verify_format;
    add_format_flag(verify_cmd, verify_format, "json");

    std::string cs_input;
    auto* char_sets_cmd = app.add_subcommand("char-sets", "Admissible characteristics");
    char_sets_cmd->add_option("--input", cs_input, "Cohomology data JSON file")->required();
    std::string char_sets_format;
    add_format_flag(char_sets_cmd, char_sets_format, "json");

    long tc_k = 2, tc_m = 6;
    int tc_expand = 0;
    auto* tcgen_cmd = app.add_subcommand("tcgen", "TC generating-function numerator");
    tcgen_cmd->add_option("--k", tc_k, "Nilpotency index")->required();
    tcgen_cmd->add_option("--m", tc_m, "Stored prefix length")->capture_default_str();
    tcgen_cmd->add_option("--expand", tc_expand, "Also expand this many series coefficients");
    std::string tcgen_format;
    add_format_flag(tcgen_cmd, tcgen_format, "json");

    std::string cw_input, cw_relators = "high";
    int cw_alpha_boost = 0;
    auto* cw_build_cmd = app.add_subcommand("cw-build", "Synthesize a minimal cell structure");
    cw_build_cmd->add_option("--input", cw_input, "Cohomology data JSON file")->required();
    cw_build_cmd->add_option("--relators", cw_relators, "Middle-pair placement")
        ->check(CLI::IsMember({"high", "low"}))
        ->capture_default_str();
    cw_build_cmd->add_option("--alpha-boost", cw_alpha_boost, "Extra exponent on middle pairs")
        ->capture_default_str();
    std::string cw_build_format;
    add_format_flag(cw_build_cmd, cw_build_format, "json");

    std::string cc_structure;
    std::uint64_t cc_char = 0;
    auto* cw_check_cmd = app.add_subcommand("cw-check", "Cochain cohomology of a cell structure");
    cw_check_cmd->add_option("--structure", cc_structure, "Cell structure JSON file")->required();
    cw_check_cmd->add_option("--char", cc_char, "Field characteristic (0 or prime)")
        ->capture_default_str();
    std::string cw_check_format;
    add_format_flag(cw_check_cmd, cw_check_format, "json");

    int t2_r = 6;
    std::string t2_k_list = "4,5,16,18,20,22";
    auto* table2_cmd = app.add_subcommand("table2", "Excluded characteristics per k");
    table2_cmd->add_option("--r", t2_r, "Generator degree")->capture_default_str();
    table2_cmd->add_option("--k-list", t2_k_list, "Comma-separated k values")
        ->capture_default_str();
    std::string table2_format;
    add_format_flag(table2_cmd, table2_format, "text");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& h) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& pe) {
        err << pe.what() << "\n";
        return 2;
    }

    try {
        if (lambda_cmd->parsed()) {
            e.format = lo.format;
            run_lambda(lo, e);
        } else if (lambda_table_cmd->parsed()) {
            e.format = lambda_table_format;
            run_lambda_table(table_max, false, e);
        } else if (table1_cmd->parsed()) {
            e.format = table1_format;
            run_lambda_table(table1_max, true, e);
        } else if (witness_cmd->parsed()) {
            e.format = wo.format;
            run_witness(wo, e);
        } else if (verify_cmd->parsed()) {
            e.format = verify_format;
            run_verify_lemma2(vl_max_n, vl_max_k, vl_max_terms, e);
        } else if (char_sets_cmd->parsed()) {
            e.format = char_sets_format;
            run_char_sets(cs_input, e);
        } else if (tcgen_cmd->parsed()) {
            e.format = tcgen_format;
            run_tcgen(tc_k, tc_m, tc_expand, e);
        } else if (cw_build_cmd->parsed()) {
            e.format = cw_build_format;
            run_cw_build(cw_input, cw_relators, cw_alpha_boost, e);
        } else if (cw_check_cmd->parsed()) {
            e.format = cw_check_format;
            run_cw_check(cc_structure, cc_char, e);
        } else if (table2_cmd->parsed()) {
            e.format = table2_format;
            run_table2(t2_r, t2_k_list, e);
        }
    } catch (const ResourceError& re) {
        out << dump_json(Json{{"error", Json{{"type", "resource"}, {"message", re.what()}}}});
        err << "resource error: " << re.what() << "\n";
        return 1;
    } catch (const DomainError& de) {
        out << dump_json(Json{{"error", Json{{"type", "domain"}, {"message", de.what()}}}});
        err << "error: " << de.what() << "\n";
        return 1;
    }

    e.write(out);
    return 0;
}

}  // namespace tcalc
