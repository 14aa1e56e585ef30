#include "cdga/cli.hpp"

#include "cdga/cohomology.hpp"
#include "cdga/massey.hpp"
#include "cdga/minimal_model.hpp"
#include "cdga/model_io.hpp"
#include "cdga/scenarios.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace cdga::cli {

namespace {

// Invocation problems that are not ParseErrors (unreadable file, malformed
// builtin name, bad --degrees list). Mapped to exit code 2.
struct UsageError {
    std::string message;
};

Dga load_model(const std::string& arg)
{
    if (arg == "heisenberg")
        return heisenberg_model();
    if (arg == "paper:x7")
        return paper_x(7).dga;
    if (arg == "paper:x8")
        return paper_x(8).dga;
    if (arg.rfind("torus:", 0) == 0) {
        const std::string num = arg.substr(6);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError{"malformed torus model name '" + arg + "' (expected torus:N)"};
        return torus_model(std::stoi(num));
    }
    std::ifstream in(arg);
    if (!in)
        throw UsageError{"cannot read model file '" + arg + "'"};
    std::ostringstream text;
    text << in.rdbuf();
    return parse_model(text.str());
}

std::vector<int> parse_degree_list(const std::string& arg)
{
    std::vector<int> out;
    std::string cur;
    std::istringstream in(arg);
    while (std::getline(in, cur, ',')) {
        if (cur.empty() || cur.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError{"malformed --degrees list '" + arg + "' (expected p,q,r)"};
        out.push_back(std::stoi(cur));
    }
    if (out.size() != 3)
        throw UsageError{"--degrees needs exactly three comma-separated degrees"};
    return out;
}

std::string join_ints(const std::vector<int>& v)
{
    std::string out;
    for (size_t i = 0; i < v.size(); ++i)
        out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

std::string massey_line(const MasseyResult& mr)
{
    return "representative " + render(mr.w) + "; indeterminacy dim " +
           std::to_string(mr.indeterminacy.dim()) + "; " + (mr.vanishes ? "VANISHES" : "NONZERO");
}

nlohmann::ordered_json report_json(const PaperReport& rep)
{
    nlohmann::ordered_json doc;
    doc["dim"] = rep.dimension;
    doc["betti"] = rep.betti;
    if (rep.massey) {
        doc["massey_representative"] = render(rep.massey->w);
        doc["indeterminacy_dim"] = rep.massey->indeterminacy.dim();
    } else {
        doc["massey_representative"] = nullptr;
        doc["indeterminacy_dim"] = nullptr;
    }
    if (rep.certificate)
        doc["pairing"] = rat_str(rep.certificate->pairing_value);
    else
        doc["pairing"] = nullptr;
    auto& verdicts = doc["verdicts"] = nlohmann::ordered_json::array();
    for (const auto& v : rep.verdicts)
        verdicts.push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
    doc["pass"] = rep.pass;
    return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact cohomology, cup product and Massey product calculator for finite CDGA models"};
    app.require_subcommand(1);

    std::string model_arg, a_expr, b_expr, c_expr, dual_expr, degrees_arg;
    int degree = 0, up_to = 6, dim = 0;
    bool json = false;

    const std::string model_help = "model file, or builtin heisenberg|torus:N|paper:x7|paper:x8";

    auto* cmd_check = app.add_subcommand("check", "validate a model (d^2 = 0 on every generator)");
    cmd_check->add_option("model", model_arg, model_help)->required();

    auto* cmd_betti = app.add_subcommand("betti", "Betti numbers through the top degree");
    cmd_betti->add_option("model", model_arg, model_help)->required();

    auto* cmd_cohomology = app.add_subcommand("cohomology", "representatives of a cohomology basis");
    cmd_cohomology->add_option("model", model_arg, model_help)->required();
    cmd_cohomology->add_option("--degree", degree, "cohomological degree")->required();

    auto* cmd_massey = app.add_subcommand("massey", "triple Massey product of three closed elements");
    cmd_massey->add_option("model", model_arg, model_help)->required();
    cmd_massey->add_option("a", a_expr, "first element expression")->required();
    cmd_massey->add_option("b", b_expr, "second element expression")->required();
    cmd_massey->add_option("c", c_expr, "third element expression")->required();
    cmd_massey->add_option("--dual", dual_expr, "dual class for the pairing certificate");

    auto* cmd_scan = app.add_subcommand("scan", "scan basis-class triples for nonvanishing products");
    cmd_scan->add_option("model", model_arg, model_help)->required();
    cmd_scan->add_option("--degrees", degrees_arg, "degree triple p,q,r")->required();

    auto* cmd_minimal = app.add_subcommand("minimal", "minimal model up to a degree cutoff");
    cmd_minimal->add_option("model", model_arg, model_help)->required();
    cmd_minimal->add_option("--up-to", up_to, "degree cutoff (default 6)");

    auto* cmd_verify = app.add_subcommand("verify-paper", "run the built-in product model verification");
    cmd_verify->add_option("--dim", dim, "model dimension, 7 or 8")->required()->check(CLI::IsMember({7, 8}));
    cmd_verify->add_flag("--json", json, "emit a machine-readable JSON report");

    std::vector<const char*> argv;
    argv.push_back("cdga");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_check) {
            Dga dga = load_model(model_arg);
            out << "ok: d²=0, " << dga.algebra().gen_count() << " generators\n";
        } else if (*cmd_betti) {
            out << join_ints(betti(load_model(model_arg))) << "\n";
        } else if (*cmd_cohomology) {
            Dga dga = load_model(model_arg);
            const auto& h = cohomology(dga, degree);
            std::string line;
            for (int i = 0; i < h.dim(); ++i)
                line += (i ? ", " : "") + render(h.representatives[i]);
            out << line << "\n";
        } else if (*cmd_massey) {
            Dga dga = load_model(model_arg);
            Element a = parse_element(dga, a_expr);
            Element b = parse_element(dga, b_expr);
            Element c = parse_element(dga, c_expr);
            MasseyResult mr = triple_massey(dga, a, b, c);
            std::string line = massey_line(mr);
            if (!dual_expr.empty()) {
                PairingCertificate cert = certify_nonvanishing(mr, parse_element(dga, dual_expr));
                line += "; pairing " + rat_str(cert.pairing_value) + "; " +
                        (cert.certified ? "certified nonzero mod indeterminacy" : "not certified");
            }
            out << line << "\n";
        } else if (*cmd_scan) {
            Dga dga = load_model(model_arg);
            auto deg = parse_degree_list(degrees_arg);
            auto found = scan_triple_massey(dga, deg[0], deg[1], deg[2]);
            if (found.empty()) {
                out << "no nonvanishing products\n";
            } else {
                for (const auto& mr : found)
                    out << "witness: " << render(mr.a) << " ; " << render(mr.b) << " ; " << render(mr.c)
                        << " -> " << massey_line(mr) << "\n";
            }
        } else if (*cmd_minimal) {
            Dga dga = load_model(model_arg);
            if (is_minimal(dga)) {
                out << "input already minimal\n";
            } else {
                MinimalModelResult res = minimal_model(dga, up_to);
                std::map<int, std::vector<std::string>> by_degree;
                for (const auto& g : res.model.algebra().gens())
                    by_degree[g.degree].push_back(g.name);
                for (const auto& [k, names] : by_degree) {
                    out << "degree " << k << ":";
                    for (const auto& n : names)
                        out << " " << n;
                    out << "\n";
                }
                out << "quasi-isomorphism through degree " << res.cutoff << ": "
                    << (check_quasi_iso(res) ? "yes" : "no") << "\n";
            }
        } else if (*cmd_verify) {
            PaperReport rep = verify_paper(dim);
            if (json)
                out << report_json(rep).dump(2) << "\n";
            else
                out << render_report(rep);
            return rep.pass ? 0 : 1;
        }
    } catch (const UsageError& e) {
        err << e.message << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace cdga::cli
