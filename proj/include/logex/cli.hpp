#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "logex/eval.hpp"
#include "logex/format.hpp"

namespace logex {

namespace detail {

struct cli_options {
    context ctx;
    bool json = false;
    std::string command;
    std::string argument;
};

inline void cli_usage(std::ostream& out) {
    out << "usage: logex [flags] <command>\n"
           "\n"
           "commands:\n"
           "  eval EXPR          evaluate one expression and print the result\n"
           "  repl               read-evaluate-print loop on stdin\n"
           "  test-corpus PATH   run a corpus file of `expr => expected` lines\n"
           "\n"
           "flags:\n"
           "  --max-terms N      retained terms per series (default 30)\n"
           "  --log-depth D      iterated-log depth budget (default 4)\n"
           "  --exp-height H     exponential height budget (default 4)\n"
           "  --coeff MODE       rational | float (default rational)\n"
           "  --prec BITS        float precision in bits (default 128)\n"
           "  --tol T            zero tolerance for float coefficients (default 1e-30)\n"
           "  --json             machine-readable output\n";
}

inline cli_options parse_cli(const std::vector<std::string>& args) {
    int max_terms = 30, log_depth = 4, exp_height = 4;
    scalar_mode mode = scalar_mode::rational;
    unsigned prec = 128;
    std::string tol = "1e-30";
    cli_options opt;
    size_t i = 0;
    auto value = [&](const std::string& flag) -> std::string {
        if (i + 1 >= args.size()) fail(errc::syntax_error, flag + " needs a value");
        return args[++i];
    };
    for (; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--max-terms") max_terms = std::stoi(value(a));
        else if (a == "--log-depth") log_depth = std::stoi(value(a));
        else if (a == "--exp-height") exp_height = std::stoi(value(a));
        else if (a == "--prec") prec = static_cast<unsigned>(std::stoul(value(a)));
        else if (a == "--tol") tol = value(a);
        else if (a == "--json") opt.json = true;
        else if (a == "--coeff") {
            std::string m = value(a);
            if (m == "rational") mode = scalar_mode::rational;
            else if (m == "float") mode = scalar_mode::bigfloat;
            else fail(errc::syntax_error, "--coeff must be rational or float");
        } else if (a == "--help" || a == "-h") {
            opt.command = "help";
        } else if (a.rfind("--", 0) == 0) {
            fail(errc::syntax_error, "unknown flag " + a);
        } else if (opt.command.empty() || opt.command == "help") {
            opt.command = a;
        } else if (opt.argument.empty()) {
            opt.argument = a;
        } else {
            fail(errc::syntax_error, "unexpected argument " + a);
        }
    }
    opt.ctx = context(max_terms, log_depth, exp_height, mode, prec, tol);
    return opt;
}

inline nlohmann::json diagnostics_json(const cli_options& opt) {
    nlohmann::json d;
    d["mode"] = opt.ctx.mode == scalar_mode::rational ? "rational" : "float";
    d["max_terms"] = opt.ctx.max_terms;
    d["log_depth"] = opt.ctx.max_log_depth;
    d["exp_height"] = opt.ctx.max_exp_height;
    d["prec_bits"] = opt.ctx.prec_bits;
    return d;
}

inline void print_value(const cli_options& opt, const eval_value& v, std::ostream& out) {
    const context& ctx = opt.ctx;
    if (opt.json) {
        nlohmann::json j;
        j["diagnostics"] = diagnostics_json(opt);
        if (std::holds_alternative<series>(v)) {
            const series& s = std::get<series>(v);
            j["result"] = series_to_json(ctx, s);
            j["cutoff"] = s.cutoff() ? nlohmann::json(format_monomial(ctx, *s.cutoff()))
                                     : nlohmann::json();
        } else if (std::holds_alternative<abel_result>(v)) {
            j["result"] = abel_to_json(ctx, std::get<abel_result>(v));
            j["cutoff"] = nlohmann::json();
        } else {
            j["result"] = format_ordering(std::get<ordering>(v));
            j["cutoff"] = nlohmann::json();
        }
        out << j.dump() << "\n";
        return;
    }
    if (std::holds_alternative<series>(v))
        out << format_series(ctx, std::get<series>(v)) << "\n";
    else if (std::holds_alternative<abel_result>(v))
        out << format_abel(ctx, std::get<abel_result>(v)) << "\n";
    else
        out << format_ordering(std::get<ordering>(v)) << "\n";
}

inline int report_error(const cli_options& opt, const kernel_error& e, std::ostream& out,
                        std::ostream& err) {
    if (opt.json) {
        nlohmann::json j;
        j["result"] = nullptr;
        j["cutoff"] = nullptr;
        j["diagnostics"] = diagnostics_json(opt);
        j["diagnostics"]["error"] = errc_name(e.code());
        j["diagnostics"]["message"] = e.what();
        out << j.dump() << "\n";
    }
    err << e.what() << "\n";
    return is_budget_error(e.code()) ? 3 : 2;
}

inline int run_repl(const cli_options& opt, std::istream& in, std::ostream& out,
                    std::ostream& err) {
    std::string line;
    out << "logex> " << std::flush;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t");
        if (first != std::string::npos && line[first] != '#') {
            std::string body = line.substr(first);
            if (body == "quit" || body == "exit") break;
            try {
                print_value(opt, evaluate(opt.ctx, parse(opt.ctx, body)), out);
            } catch (const kernel_error& e) {
                err << e.what() << "\n";
            }
        }
        out << "logex> " << std::flush;
    }
    return 0;
}

// Corpus line format: EXPR => EXPECTED, where EXPECTED is the canonical
// rendering or `error: <Code>`. `#` starts a comment.
inline int run_corpus(const cli_options& opt, const std::string& path, std::ostream& out,
                      std::ostream& err) {
    std::ifstream file(path);
    if (!file) {
        err << "cannot open corpus file " << path << "\n";
        return 2;
    }
    int total = 0, failed = 0, lineno = 0;
    std::string line;
    while (std::getline(file, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        auto sep = line.find("=>");
        if (sep == std::string::npos) {
            err << "line " << lineno << ": missing '=>'\n";
            ++failed;
            ++total;
            continue;
        }
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string input = trim(line.substr(0, sep));
        std::string expected = trim(line.substr(sep + 2));
        ++total;
        std::string got;
        try {
            eval_value v = evaluate(opt.ctx, parse(opt.ctx, input));
            std::ostringstream os;
            cli_options plain = opt;
            plain.json = false;
            print_value(plain, v, os);
            got = trim(os.str());
            if (auto nl = got.find('\n'); nl != std::string::npos) got = got.substr(0, nl);
        } catch (const kernel_error& e) {
            got = std::string("error: ") + errc_name(e.code());
        }
        if (got == expected) {
            out << "ok " << lineno << ": " << input << "\n";
        } else {
            out << "FAIL " << lineno << ": " << input << "\n     expected: " << expected
                << "\n     got:      " << got << "\n";
            ++failed;
        }
    }
    out << total - failed << "/" << total << " corpus cases passed\n";
    return failed == 0 ? 0 : 2;
}

} // namespace detail

// Batch command entry point; also the programmatic surface the tests drive.
inline int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                       std::ostream& err) {
    detail::cli_options opt;
    try {
        opt = detail::parse_cli(args);
    } catch (const kernel_error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "bad flag value: " << e.what() << "\n";
        return 2;
    }
    try {
        if (opt.command == "help" || opt.command.empty()) {
            detail::cli_usage(out);
            return opt.command.empty() ? 2 : 0;
        }
        if (opt.command == "eval") {
            if (opt.argument.empty()) fail(errc::syntax_error, "eval needs an expression");
            detail::print_value(opt, evaluate(opt.ctx, parse(opt.ctx, opt.argument)), out);
            return 0;
        }
        if (opt.command == "repl") return detail::run_repl(opt, in, out, err);
        if (opt.command == "test-corpus") {
            if (opt.argument.empty()) fail(errc::syntax_error, "test-corpus needs a path");
            return detail::run_corpus(opt, opt.argument, out, err);
        }
        fail(errc::syntax_error, "unknown command '" + opt.command + "'");
    } catch (const kernel_error& e) {
        return detail::report_error(opt, e, out, err);
    }
}

} // namespace logex
