// Command-line front end: minimal polynomials, ISP counts and lists,
// λ-continued fractions, RPF construction and verification.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hecke/json_io.hpp"

using namespace hecke;

namespace {

enum class Output { text, json, latex };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_p(int p) {
    if (p < 3) throw UsageError("--p must be at least 3, got " + std::to_string(p));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string part;
    std::istringstream in(s);
    while (std::getline(in, part, sep)) out.push_back(part);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

long parse_long(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("bad " + what + ": \"" + s + "\"");
    }
}

GenWord parse_word(int p, const std::string& text) {
    std::vector<int> letters;
    for (const auto& part : split(text, ',')) letters.push_back(static_cast<int>(parse_long(part, "letter")));
    if (letters.empty()) throw UsageError("--word is empty");
    try {
        return GenWord::make(p, letters);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

RingElem parse_ring(int p, const std::string& text) {
    std::vector<mpz_class> cs;
    for (const auto& part : split(text, ',')) {
        mpz_class c;
        if (part.empty() || c.set_str(part, 10) != 0) throw UsageError("bad coefficient: \"" + part + "\"");
        cs.push_back(c);
    }
    if (static_cast<int>(cs.size()) > HeckeField::get(p).degree())
        throw UsageError("more coefficients than the field degree " + std::to_string(HeckeField::get(p).degree()));
    return RingElem(p, std::move(cs));
}

Surd parse_surd(int p, const std::string& text) {
    const auto parts = split(text, ';');
    if (parts.size() != 3) throw UsageError("--surd expects \"P;Q;D\"");
    try {
        return Surd(parse_ring(p, parts[0]), parse_ring(p, parts[1]), parse_ring(p, parts[2]));
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- subcommands

void run_minpoly(int p, Output out) {
    require_p(p);
    const MinPoly m = minimal_polynomial(p);
    if (out == Output::json) {
        print_json(to_json(m));
        return;
    }
    std::cout << m.to_string() << "\n";
    if (out == Output::text) std::cout << to_json(m).dump() << "\n";
}

void run_count(int p, int max_n, Output out) {
    require_p(p);
    if (max_n < 1) throw UsageError("--max-n must be positive");
    const CountTable t = count_table(p, max_n);
    if (out == Output::json) {
        print_json(to_json(t));
        return;
    }
    std::cout << "n\tcount\n";
    for (const auto& [n, c] : t.rows) std::cout << n << "\t" << c.get_str() << "\n";
}

void run_isps(int p, int n, bool sym_only, bool nonsym_only, int digits, Output out) {
    require_p(p);
    if (n < 1) throw UsageError("--n must be positive");
    if (digits < 1) throw UsageError("--decimal-digits must be positive");
    std::vector<ISP> isps;
    for (ISP& isp : enumerate_isps(p, n)) {
        if (sym_only && !isp.symmetric) continue;
        if (nonsym_only && isp.symmetric) continue;
        isps.push_back(std::move(isp));
    }
    if (out == Output::json) {
        Json a = Json::array();
        for (const ISP& isp : isps) a.push_back(to_json(isp, digits));
        print_json(a);
        return;
    }
    if (out == Output::latex) {
        for (const ISP& isp : isps) {
            std::string line;
            for (std::size_t i = 0; i < isp.positives.size(); ++i) {
                if (i) line += ", ";
                line += to_latex(isp.positives[i].value());
            }
            std::cout << "\\{" << line << "\\}\n";
        }
        return;
    }
    std::cout << isps.size() << " ISP(s) in G_" << p << " with " << n << " positive pole(s)\n";
    for (const ISP& isp : isps) {
        std::cout << "word " << isp.word.to_string() << "  D = " << isp.D.to_string()
                  << (isp.symmetric ? "  symmetric" : "  conjugate " + isp.conjugate_word.to_string()) << "\n";
        for (const Surd& s : isp.positives) std::cout << "  " << s.to_string() << " = " << to_decimal(s, digits) << "\n";
    }
}

void run_cf(int p, const std::string& word_text, const std::string& surd_text, int digits, Output out) {
    require_p(p);
    if (word_text.empty() == surd_text.empty()) throw UsageError("give exactly one of --word and --surd");
    Json j;
    std::vector<std::string> lines;
    if (!word_text.empty()) {
        const GenWord w = parse_word(p, word_text);
        if (w.parabolic()) throw ParabolicError("word " + w.to_string() + " is parabolic");
        const CF cf{p, {}, word_to_period(w)};
        const Surd beta = surd_of_cf(cf);
        const Mat m = word_to_matrix(w);
        j = Json{{"word", to_json(w)}, {"cf", to_json(cf)}, {"reduced_point", to_json(beta)},
                 {"reduced_point_decimal", to_decimal(beta, digits)}, {"trace", to_json(m.trace())}};
        lines = {"word " + w.to_string(), "period " + cf.to_string(),
                 "reduced point " + beta.to_string() + " = " + to_decimal(beta, digits),
                 "matrix " + m.to_string()};
    } else {
        const Surd a = parse_surd(p, surd_text);
        const CF cf = cf_expand(a);
        j = Json{{"surd", to_json(a)}, {"decimal", to_decimal(a, digits)}, {"cf", to_json(cf)},
                 {"reduced", is_reduced(a)}};
        lines = {a.to_string() + " = " + to_decimal(a, digits), "cf " + cf.to_string(),
                 std::string("reduced ") + (is_reduced(a) ? "yes" : "no")};
        if (!is_parabolic_period(cf)) {
            const GenWord w = period_to_word(p, cf.period);
            j["word"] = to_json(w);
            lines.push_back("class word " + w.to_string());
        }
    }
    if (out == Output::json) {
        print_json(j);
        return;
    }
    for (const auto& l : lines) std::cout << l << "\n";
}

void print_rpf(const std::string& construction, const ISP& isp, const RPF& q, const Verdict& v, Output out,
               const Json& extra = Json()) {
    if (out == Output::json) {
        Json j{{"word", isp.word.letters}, {"construction", construction}, {"rpf", to_json(q)},
               {"latex", to_latex(q)}, {"verdict", to_json(v)}};
        if (!extra.is_null()) j.update(extra);
        print_json(j);
        return;
    }
    if (out == Output::latex) {
        std::cout << "q(z) = " << to_latex(q) << "\n";
        return;
    }
    std::cout << "word " << isp.word.to_string() << " in G_" << isp.p() << " ("
              << (isp.symmetric ? "symmetric" : "not symmetric") << "), weight " << 2 * q.k << "\n";
    std::cout << "construction " << construction << "\n";
    std::cout << "q(z) = " << to_latex(q) << "\n";
    std::cout << "verify " << (v.valid ? "valid" : "INVALID") << " (" << v.points_checked << " points)\n";
    if (!extra.is_null()) std::cout << "family " << extra.dump() << "\n";
    std::cout << to_json(q).dump() << "\n";
}

int run_rpf(int p, const std::string& word_text, int weight, const std::string& mode, Output out) {
    require_p(p);
    if (weight < 2 || weight % 2) throw UsageError("--weight must be a positive even integer");
    const int k = weight / 2;
    const GenWord w = parse_word(p, word_text);
    const ISP isp = isp_of_word(w);

    std::string chosen = mode;
    if (chosen == "auto") chosen = isp.symmetric ? (k % 2 ? "symmetric-odd" : "ansatz") : "union";

    if (chosen == "symmetric-odd" || chosen == "union") {
        const RPF q = chosen == "union" ? build_union(k, isp) : build_symmetric_odd(k, isp);
        const Verdict v = verify(q);
        if (!v.valid) throw InternalError(chosen + " construction failed verification");
        print_rpf(chosen, isp, q, v, out);
        return 0;
    }

    const AnsatzResult r =
        build_ansatz(k, isp, isp.symmetric ? AnsatzTemplate::symmetric : AnsatzTemplate::nonsymmetric);
    if (r.kind == AnsatzResult::Kind::no_solution) {
        const std::string msg = "no RPF exists for this (ISP, weight) under this template";
        if (out == Output::json)
            print_json(Json{{"word", isp.word.letters}, {"construction", "ansatz"}, {"result", "no_solution"},
                            {"message", msg}, {"equations", r.equations}, {"rank", r.rank}});
        else
            std::cout << msg << "\n";
        return 0;
    }
    const Verdict v = verify(r.particular);
    if (!v.valid) throw InternalError("ansatz solution failed verification");
    Json extra;
    if (r.kind == AnsatzResult::Kind::family) {
        Json dirs = Json::array();
        for (const auto& d : r.directions) {
            Json dj = Json::array();
            for (const auto& c : d) dj.push_back(to_json(c));
            dirs.push_back(dj);
        }
        extra = Json{{"family_directions", dirs}};
    }
    print_rpf("ansatz", isp, r.particular, v, out, extra);
    return 0;
}

int run_verify(const std::string& path, int digits, Output out) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    RPF q;
    try {
        q = rpf_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    } catch (const ParseError& e) {
        throw UsageError(std::string("not an RPF: ") + e.what());
    } catch (const DomainError& e) {
        throw UsageError(std::string("not an RPF: ") + e.what());
    }
    const Verdict v = verify(q);
    if (out == Output::json) {
        print_json(to_json(v, digits));
        return 0;
    }
    if (v.valid) {
        std::cout << "valid (" << v.points_checked << " points)\n";
    } else {
        std::cout << "invalid: relation " << v.relation << " fails at z = " << v.witness->to_string()
                  << ", residual " << to_decimal(*v.residual, digits) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with rational period functions on Hecke groups"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out = Output::text;
    const std::map<std::string, Output> outputs{{"text", Output::text}, {"json", Output::json}, {"latex", Output::latex}};
    app.add_option("--output", out, "Output format")->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case));

    int p = 0, n = 0, max_n = 8, weight = 2, digits = 30;
    std::string word, surd, mode = "auto", file;
    bool sym_only = false, nonsym_only = false;

    auto* minpoly = app.add_subcommand("minpoly", "Minimal polynomial of lambda_p");
    minpoly->add_option("--p", p, "Hecke group index")->required();

    auto* count = app.add_subcommand("count", "Number of ISPs by positive pole count");
    count->add_option("--p", p)->required();
    count->add_option("--max-n", max_n);

    auto* isps = app.add_subcommand("isps", "List ISPs with n positive poles");
    isps->add_option("--p", p)->required();
    isps->add_option("--n", n)->required();
    auto* so = isps->add_flag("--symmetric-only", sym_only);
    isps->add_flag("--nonsymmetric-only", nonsym_only)->excludes(so);
    isps->add_option("--decimal-digits", digits);

    auto* cf = app.add_subcommand("cf", "Lambda-continued fraction of a word's reduced point or of a surd");
    cf->add_option("--p", p)->required();
    cf->add_option("--word", word, "Comma-separated generator letters");
    cf->add_option("--surd", surd, "\"P;Q;D\" for (P + sqrt(D))/Q, each a comma-separated coefficient list");
    cf->add_option("--decimal-digits", digits);

    auto* rpf = app.add_subcommand("rpf", "Construct and verify a rational period function");
    rpf->add_option("--p", p)->required();
    rpf->add_option("--word", word)->required();
    rpf->add_option("--weight", weight, "Weight 2k")->required();
    rpf->add_option("--mode", mode)->check(CLI::IsMember({"auto", "symmetric-odd", "union", "ansatz"}));

    auto* ver = app.add_subcommand("verify", "Verify an RPF given as JSON");
    ver->add_option("--file", file)->required();
    ver->add_option("--decimal-digits", digits);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*minpoly) run_minpoly(p, out);
        if (*count) run_count(p, max_n, out);
        if (*isps) run_isps(p, n, sym_only, nonsym_only, digits, out);
        if (*cf) run_cf(p, word, surd, digits, out);
        if (*rpf) return run_rpf(p, word, weight, mode, out);
        if (*ver) return run_verify(file, digits, out);
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
