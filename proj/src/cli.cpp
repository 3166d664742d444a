/*
   Copyright 2026 The symdecomp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "symdecomp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "symdecomp/decompose.hpp"
#include "symdecomp/json_io.hpp"
#include "symdecomp/oracle.hpp"
#include "symdecomp/parser.hpp"
#include "symdecomp/reduction.hpp"

namespace symdecomp {

namespace {

struct cli_config {
    std::string subcommand;
    std::size_t n = 0;
    std::uint64_t max_degree = 8;
    std::uint64_t seed = 0;
    std::size_t trials = 200;
    std::size_t es_index = 0;
    std::string expr;
    std::string input_path;
    std::string format = "text";
};

std::string read_input(const cli_config& cfg, std::istream& in) {
    if (!cfg.expr.empty() && !cfg.input_path.empty())
        throw argument_error("give the expression either inline or via --input, not both");
    if (!cfg.expr.empty())
        return cfg.expr;
    if (cfg.input_path.empty())
        throw argument_error("no input: pass an expression or --input <file|->");
    if (cfg.input_path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(cfg.input_path);
    if (!file)
        throw argument_error("cannot open input file: " + cfg.input_path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
            continue;
        return c == '{';
    }
    return false;
}

int_polynomial parse_poly_input(const std::string& text, std::size_t n_flag, std::size_t& n_out) {
    if (looks_like_json(text)) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw argument_error(std::string("invalid JSON input: ") + e.what());
        }
        int_polynomial u = poly_from_json<integer_domain>(j);
        if (n_flag != 0 && n_flag != u.n())
            throw argument_error("--n disagrees with the JSON polynomial");
        n_out = u.n();
        return u;
    }
    if (n_flag == 0)
        throw argument_error("--n is required for text input");
    n_out = n_flag;
    return parse_polynomial<integer_domain>(text, n_flag);
}

std::string render_dterm(const d_monomial& r, const int_polynomial& expansion) {
    // Pull a leading minus out of all-negative expansions so single
    // coordinates read as "- d2 ⊗ 1" rather than "+ d2 ⊗ -1".
    bool all_negative = true;
    for (const auto& [m, c] : expansion.terms())
        all_negative = all_negative && c < 0;
    const int_polynomial shown = all_negative ? -expansion : expansion;
    std::string body = render_polynomial(shown);
    if (shown.term_count() > 1)
        body = "(" + body + ")";
    return (all_negative ? std::string("- ") : std::string("")) + r.to_string() + " ⊗ " +
           body;
}

std::string render_decomposition_human(const int_decomposition& dec) {
    if (dec.empty())
        return "0";
    std::string s;
    for (const auto& [iset, terms] : dec.components) {
        for (const auto& t : terms) {
            std::string piece = render_dterm(t.r, t.elem.expand());
            if (s.empty()) {
                s = std::move(piece);
                continue;
            }
            if (piece.rfind("- ", 0) == 0)
                s += " - " + piece.substr(2);
            else
                s += " + " + piece;
        }
    }
    return s;
}

int cmd_decompose(const cli_config& cfg, std::ostream& out, std::ostream& err) {
    std::size_t n = 0;
    const std::string text = read_input(cfg, std::cin);
    const int_polynomial u = parse_poly_input(text, cfg.n, n);
    const int_decomposition dec = decompose(u);
    if (!(recompose(dec) == u)) {
        err << "error: internal round-trip mismatch\n";
        return 1;
    }
    const nlohmann::json j = decomposition_to_json(dec);
    if (cfg.format == "json") {
        out << j.dump() << "\n";
    } else {
        out << render_decomposition_human(dec) << "\n";
        out << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_glm(const cli_config& cfg, std::ostream& out, std::ostream&) {
    std::size_t n = 0;
    const int_polynomial u = parse_poly_input(read_input(cfg, std::cin), cfg.n, n);
    const std::vector<monomial> leading = glm(u);
    if (cfg.format == "json") {
        nlohmann::json items = nlohmann::json::array();
        for (const monomial& m : leading)
            items.push_back({{"exps", m.exps()}, {"text", render_monomial(m)}});
        out << nlohmann::json{{"n", n}, {"glm", std::move(items)}}.dump() << "\n";
        return 0;
    }
    if (leading.empty()) {
        out << "{}\n";
        return 0;
    }
    std::string line;
    for (const monomial& m : leading) {
        if (!line.empty())
            line += ", ";
        line += render_monomial(m);
    }
    out << "{" << line << "}\n";
    return 0;
}

int cmd_reduce(const cli_config& cfg, std::ostream& out, std::ostream&) {
    std::size_t n = 0;
    const int_polynomial u = parse_poly_input(read_input(cfg, std::cin), cfg.n, n);
    if (u.term_count() != 1 || !integer_domain::eq(u.terms().begin()->second, 1))
        throw argument_error("reduce expects a single monomial with coefficient 1");
    const monomial m = u.terms().begin()->first;
    const monomial red = reduce(m);
    const reduced_classification cls = classify_reduced(red);
    if (cfg.format == "json") {
        out << nlohmann::json{{"n", n},
                              {"input", {{"exps", m.exps()}, {"text", render_monomial(m)}}},
                              {"reduced",
                               {{"exps", red.exps()}, {"text", render_monomial(red)}}},
                              {"g",
                               {{"images", cls.g.images()},
                                {"cycles", render_permutation(cls.g)}}},
                              {"I", cls.iset.members()}}
                   .dump()
            << "\n";
        return 0;
    }
    out << "red: " << render_monomial(red) << "\n";
    out << "g: " << render_permutation(cls.g) << "\n";
    out << "I: " << cls.iset.to_string() << "\n";
    return 0;
}

int cmd_es(const cli_config& cfg, std::ostream& out, std::ostream&) {
    if (cfg.n == 0)
        throw argument_error("--n is required");
    const int_polynomial d = elementary_symmetric<integer_domain>(cfg.n, cfg.es_index);
    if (cfg.format == "json")
        out << poly_to_json(d).dump() << "\n";
    else
        out << render_polynomial(d) << "\n";
    return 0;
}

int cmd_modules(const cli_config& cfg, std::ostream& out, std::ostream&) {
    if (cfg.n == 0)
        throw argument_error("--n is required");
    if (cfg.n > 12)
        throw argument_error("modules: n larger than 12 is not supported");
    nlohmann::json rows = nlohmann::json::array();
    for (const index_set& iset : all_index_sets(cfg.n)) {
        const monomial e = e_prime(iset);
        rows.push_back({{"I", iset.members()},
                        {"e_prime", render_monomial(e)},
                        {"dim", module_dimension(iset)},
                        {"stabilizer_order", stabilizer_order(e)},
                        {"transversal", transversal_of(e).reps.size()}});
    }
    if (cfg.format == "json") {
        out << nlohmann::json{{"n", cfg.n}, {"modules", std::move(rows)}}.dump() << "\n";
        return 0;
    }
    out << "I\te_I'\tdim\tstab\ttransversal\n";
    for (const auto& row : rows) {
        std::string members = "{";
        for (std::size_t k = 0; k < row["I"].size(); ++k) {
            if (k > 0)
                members += ",";
            members += std::to_string(row["I"][k].get<std::size_t>());
        }
        members += "}";
        out << members << "\t" << row["e_prime"].get<std::string>() << "\t"
            << row["dim"].get<std::uint64_t>() << "\t"
            << row["stabilizer_order"].get<std::uint64_t>() << "\t"
            << row["transversal"].get<std::uint64_t>() << "\n";
    }
    return 0;
}

int cmd_verify(const cli_config& cfg, std::ostream& out, std::ostream&) {
    if (cfg.n == 0)
        throw argument_error("--n is required");
    if (cfg.n > 8)
        throw argument_error("verify: n larger than 8 is not supported");

    nlohmann::json graded = nlohmann::json::array();
    bool graded_pass = true;
    for (std::uint64_t d = 0; d <= cfg.max_degree; ++d) {
        const graded_report r = graded_basis_check(cfg.n, d);
        graded_pass = graded_pass && r.pass;
        graded.push_back(graded_report_to_json(r));
    }
    const series_report hilbert = hilbert_check(cfg.n, cfg.max_degree);
    const audit_report audit = dimension_audit(cfg.n);
    const roundtrip_report roundtrip =
        roundtrip_suite(cfg.n, cfg.max_degree, cfg.trials, cfg.seed);
    const bool pass = graded_pass && hilbert.pass && audit.pass && roundtrip.pass;

    const nlohmann::json report{{"n", cfg.n},
                                {"max_degree", cfg.max_degree},
                                {"seed", cfg.seed},
                                {"trials", cfg.trials},
                                {"prng", roundtrip.prng_name},
                                {"graded", std::move(graded)},
                                {"hilbert", series_report_to_json(hilbert)},
                                {"dimension_audit", audit_report_to_json(audit)},
                                {"roundtrip", roundtrip_report_to_json(roundtrip)},
                                {"status", pass ? "pass" : "fail"}};
    if (cfg.format == "json") {
        out << report.dump() << "\n";
    } else {
        out << "graded basis check (degrees 0.." << cfg.max_degree
            << "): " << (graded_pass ? "pass" : "fail") << "\n";
        for (const auto& g : report["graded"])
            if (g["status"] != "pass")
                out << "  degree " << g["degree"] << ": " << g["status"].get<std::string>()
                    << " (" << g.value("failure_kind", std::string{}) << ")\n";
        out << "hilbert series identity: " << (hilbert.pass ? "pass" : "fail") << "\n";
        out << "dimension audit: " << (audit.pass ? "pass" : "fail") << "\n";
        out << "roundtrip suite (" << cfg.trials << " trials, seed " << cfg.seed
            << "): " << (roundtrip.pass ? "pass" : "fail") << "\n";
        out << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    cli_config cfg;
    CLI::App app{"Exact decomposition of polynomials under the symmetric group action"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool with_input) {
        sub->add_option("--n", cfg.n, "number of variables");
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        if (with_input) {
            sub->add_option("expr", cfg.expr, "polynomial expression");
            sub->add_option("--input", cfg.input_path, "read the expression from a file or -");
        }
    };

    add_common(app.add_subcommand("decompose",
                                  "write a polynomial as a sum of d-monomials times "
                                  "module elements"),
               true);
    add_common(app.add_subcommand("glm", "print the orbit-maximal leading monomials"), true);
    add_common(app.add_subcommand("reduce",
                                  "print the reduced form of a monomial and its "
                                  "classification"),
               true);
    auto* es = app.add_subcommand("es", "print an elementary symmetric polynomial");
    add_common(es, false);
    es->add_option("i", cfg.es_index, "index of the elementary symmetric polynomial")
        ->required();
    add_common(app.add_subcommand("modules", "table of the modules V_I"), false);
    auto* verify = app.add_subcommand("verify", "run the brute-force verification suites");
    add_common(verify, false);
    verify->add_option("--max-degree", cfg.max_degree, "largest graded degree to verify");
    verify->add_option("--seed", cfg.seed, "seed for the random round-trip suite");
    verify->add_option("--trials", cfg.trials, "number of random round-trip trials");

    std::vector<const char*> argv;
    argv.push_back("symdecomp");
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream sink;
        const int code = app.exit(e, out, sink);
        if (code != 0)
            err << sink.str();
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.subcommand = app.get_subcommands().front()->get_name();
        if (cfg.subcommand == "decompose")
            return cmd_decompose(cfg, out, err);
        if (cfg.subcommand == "glm")
            return cmd_glm(cfg, out, err);
        if (cfg.subcommand == "reduce")
            return cmd_reduce(cfg, out, err);
        if (cfg.subcommand == "es")
            return cmd_es(cfg, out, err);
        if (cfg.subcommand == "modules")
            return cmd_modules(cfg, out, err);
        if (cfg.subcommand == "verify")
            return cmd_verify(cfg, out, err);
        err << "error: unknown subcommand\n";
        return 2;
    } catch (const internal_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace symdecomp
