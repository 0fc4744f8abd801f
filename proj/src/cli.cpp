#include "filippov/cli.hpp"

#include "filippov/error.hpp"
#include "filippov/io.hpp"

#include <CLI11.hpp>

#include <functional>
#include <sstream>

namespace filippov {

namespace {

IndexTuple parse_index_list(const std::string& text) {
    IndexTuple out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || used == 0)
            throw Error(ErrorKind::ParseError, "bad index \"" + item + "\" in list \"" + text + "\"");
        out.push_back(v);
    }
    return out;
}

// "i0=1,2" or plain "1,2"
IndexTuple parse_splitting_arg(const std::string& text) {
    const std::string prefix = "i0=";
    if (text.rfind(prefix, 0) == 0)
        return parse_index_list(text.substr(prefix.size()));
    return parse_index_list(text);
}

std::vector<int> parse_weights(const std::string& text) {
    std::vector<int> w = parse_index_list(text);
    for (int x : w)
        if (x < 0)
            throw Error(ErrorKind::ParseError, "weights must be nonnegative");
    return w;
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
    if (path.empty())
        out << dump(j);
    else
        write_text_file(path, dump(j));
}

NLieAlgebra recheck(const NLieAlgebra& alg) {
    if (debug_recheck_enabled() && !verify_fi(alg).holds())
        throw Error(ErrorKind::RecheckFailed, "result fails the Filippov identity");
    return alg;
}

// Contractions keep the basis, so an induced file's word labels still apply.
Json with_word_labels(Json result, const Json& source) {
    for (const char* key : {"source_arity", "source_dim", "basis_words"})
        if (source.contains(key))
            result[key] = source.at(key);
    return result;
}

LieAlgebra recheck(const LieAlgebra& lie) {
    if (debug_recheck_enabled() && !verify_ji(lie).holds())
        throw Error(ErrorKind::RecheckFailed, "result fails the Jacobi identity");
    return lie;
}

Grading grading_for_splitting(const InducedLie& il, const IndexTuple& i0) {
    const Splitting s = Splitting::from_i0(il.source_dim, i0);
    Grading g;
    for (const auto& w : il.basis_words) {
        int r = 0;
        for (int i : w)
            r += contains(s.i1, i) ? 1 : 0;
        g.weights.push_back(r);
    }
    return g;
}

void print_violations(const FIReport& report, std::ostream& out) {
    constexpr std::size_t kShown = 50;
    out << "violations: " << report.violations.size() << "\n";
    for (std::size_t i = 0; i < report.violations.size() && i < kShown; ++i)
        out << "  " << format_violation(report.violations[i]) << "\n";
    if (report.violations.size() > kShown)
        out << "  ... " << report.violations.size() - kShown << " more\n";
}

// Ideal given either as coordinate indices or as the span of basis elements
// of a given weight under a splitting.
struct IdealChoice {
    std::string indices;
    std::string splitting;
    int weight = -1;

    Subspace resolve(const Json& doc, int dim) const {
        if (!indices.empty() && !splitting.empty())
            throw Error(ErrorKind::ParseError, "give either --indices or --splitting, not both");
        std::vector<std::size_t> coords;
        if (!splitting.empty()) {
            if (weight < 0)
                throw Error(ErrorKind::ParseError, "--splitting needs --weight");
            const Grading g = grading_for_splitting(induced_from_json(doc), parse_splitting_arg(splitting));
            for (std::size_t i = 0; i < g.weights.size(); ++i)
                if (g.weights[i] == weight)
                    coords.push_back(i);
        } else {
            for (int i : parse_index_list(indices)) {
                if (i < 1 || i > dim)
                    throw Error(ErrorKind::IndexOutOfRange, "basis index " + std::to_string(i));
                coords.push_back(static_cast<std::size_t>(i - 1));
            }
        }
        return Subspace::coordinate(static_cast<std::size_t>(dim), coords);
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--indices", indices, "Basis indices spanning the ideal, e.g. 6");
        cmd->add_option("--splitting", splitting, "Splitting of the source algebra, e.g. i0=1,2");
        cmd->add_option("--weight", weight, "Weight of the basis elements spanning the ideal");
    }
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with n-Lie (Filippov) algebras", "filippov"};
    app.require_subcommand(1);

    std::string file, file_b, out_path, json_path, i0_text, indices_text, weights_text, grading_path, splitting_text,
        map_path, target_path;
    int n = 0;
    bool antisymmetrized = false;
    IdealChoice ideal;
    std::function<int()> action;

    auto* verify = app.add_subcommand("verify-fi", "Check the Filippov identity (exit 1 on failure)");
    verify->add_option("file", file, "Algebra JSON")->required();
    verify->add_flag("--antisymmetrized", antisymmetrized, "Check the form antisymmetrized over n+1 indices");
    verify->callback([&] {
        action = [&] {
            const auto alg = nlie_from_json(read_json_file(file));
            const auto report = antisymmetrized ? verify_fi_antisymmetrized(alg) : verify_fi(alg);
            if (report.holds()) {
                out << "identity holds (arity " << alg.arity() << ", dim " << alg.dim() << ")\n";
                return kExitOk;
            }
            print_violations(report, out);
            return kExitFalse;
        };
    });

    auto* simple = app.add_subcommand("simple", "Write the simple n-Lie algebra of dim n+1");
    simple->add_option("n", n, "Arity, at least 2")->required();
    simple->add_option("--out", out_path, "Output file (default stdout)");
    simple->callback([&] {
        action = [&] {
            emit(to_json(simple_a(n)), out_path, out);
            return kExitOk;
        };
    });

    auto* contract = app.add_subcommand("contract", "Contract an n-Lie algebra along a subalgebra");
    contract->add_option("file", file, "Algebra JSON")->required();
    contract->add_option("--i0", i0_text, "Subalgebra indices, e.g. 1,2")->required();
    contract->add_option("--out", out_path, "Output file (default stdout)");
    contract->callback([&] {
        action = [&] {
            const auto alg = nlie_from_json(read_json_file(file)).checked();
            const auto c = recheck(contract_fa(alg, Splitting::from_i0(alg.dim(), parse_index_list(i0_text))));
            emit(to_json(c), out_path, out);
            return kExitOk;
        };
    });

    auto* induce_cmd = app.add_subcommand("induce", "Lie algebra of inner derivations");
    induce_cmd->add_option("file", file, "Algebra JSON")->required();
    induce_cmd->add_option("--out", out_path, "Output file (default stdout)");
    induce_cmd->callback([&] {
        action = [&] {
            const auto alg = nlie_from_json(read_json_file(file)).checked();
            auto il = induce(alg);
            il.lie = recheck(il.lie);
            emit(to_json(il), out_path, out);
            if (!out_path.empty()) {
                out << "dim " << il.lie.dim() << ", ker ad dim " << il.kernel.dim() << "\n";
                for (const auto& v : il.kernel.basis())
                    out << "  " << FundamentalObject::from_coordinates(alg.arity() - 1, alg.dim(), v).to_string()
                        << "\n";
            }
            return kExitOk;
        };
    });

    auto* iw = app.add_subcommand("iw", "Inonu-Wigner contraction of a Lie algebra");
    iw->add_option("file", file, "Lie algebra JSON")->required();
    iw->add_option("--indices", indices_text, "Basis indices of the preserved subalgebra")->required();
    iw->add_option("--out", out_path, "Output file (default stdout)");
    iw->callback([&] {
        action = [&] {
            const Json doc = read_json_file(file);
            const auto lie = lie_from_json(doc).checked();
            emit(with_word_labels(to_json(recheck(iw_contract_lie(lie, parse_index_list(indices_text)))), doc),
                 out_path, out);
            return kExitOk;
        };
    });

    auto resolve_grading = [&](const Json& doc, const LieAlgebra& lie) {
        const int given = !weights_text.empty() + !grading_path.empty() + !splitting_text.empty();
        if (given != 1)
            throw Error(ErrorKind::ParseError, "give exactly one of --weights, --grading, --splitting");
        if (!weights_text.empty())
            return Grading{parse_weights(weights_text)};
        if (!grading_path.empty())
            return grading_from_json(read_json_file(grading_path));
        const auto il = induced_from_json(doc);
        if (il.lie.dim() != lie.dim())
            throw Error(ErrorKind::DimensionMismatch, "basis_words does not match dim");
        return grading_for_splitting(il, parse_splitting_arg(splitting_text));
    };

    auto* ww = app.add_subcommand("ww", "Weimar-Woods graded contraction of a Lie algebra");
    ww->add_option("file", file, "Lie algebra JSON (an induced file for --splitting)")->required();
    ww->add_option("--weights", weights_text, "Weights, e.g. 0,1,1,2");
    ww->add_option("--grading", grading_path, "Grading JSON");
    ww->add_option("--splitting", splitting_text, "Splitting of the source algebra, e.g. i0=1,2");
    ww->add_option("--out", out_path, "Output file (default stdout)");
    ww->callback([&] {
        action = [&] {
            const Json doc = read_json_file(file);
            const auto lie = lie_from_json(doc).checked();
            emit(with_word_labels(to_json(recheck(ww_contract_lie(lie, resolve_grading(doc, lie)))), doc), out_path,
                 out);
            return kExitOk;
        };
    });

    auto* grade = app.add_subcommand("grade", "Build a grading and check the Weimar-Woods condition");
    grade->add_option("file", file, "Lie algebra JSON (an induced file for --splitting)")->required();
    grade->add_option("--weights", weights_text, "Weights, e.g. 0,1,1,2");
    grade->add_option("--grading", grading_path, "Grading JSON");
    grade->add_option("--splitting", splitting_text, "Splitting of the source algebra, e.g. i0=1,2");
    grade->add_option("--out", out_path, "Write the grading JSON here");
    grade->callback([&] {
        action = [&] {
            const Json doc = read_json_file(file);
            const auto lie = lie_from_json(doc);
            const Grading g = resolve_grading(doc, lie);
            if (!out_path.empty())
                write_text_file(out_path, dump(to_json(g)));
            const auto check = check_ww_grading(lie, g);
            if (check.holds()) {
                out << "grading valid\n";
                return kExitOk;
            }
            out << "grading violations: " << check.violations.size() << "\n";
            for (const auto& v : check.violations)
                out << "  [e" << v.i << ",e" << v.j << "] has component " << v.value << " along e" << v.k << "\n";
            return kExitFalse;
        };
    });

    auto* compare = app.add_subcommand("compare", "Compare two Lie algebras by fingerprint or explicit basis map");
    compare->add_option("a", file, "First Lie algebra JSON")->required();
    compare->add_option("b", file_b, "Second Lie algebra JSON")->required();
    compare->add_option("--map", map_path, "Basis map JSON carrying a onto b");
    compare->add_option("--json", json_path, "Write the report JSON here");
    compare->callback([&] {
        action = [&] {
            const auto a = lie_from_json(read_json_file(file));
            const auto b = lie_from_json(read_json_file(file_b));
            if (!map_path.empty()) {
                const auto m = match_structure_constants(a, b, matrix_from_json(read_json_file(map_path)));
                out << (m.matches ? "structure constants match" : "mismatch: " + m.mismatch) << "\n";
                return m.matches ? kExitOk : kExitFalse;
            }
            const auto r = compare_report(a, b);
            if (!json_path.empty())
                write_text_file(json_path, dump(to_json(r)));
            out << render_report(r);
            return r.verdict == kFingerprintEqual ? kExitOk : kExitFalse;
        };
    });

    auto* report = app.add_subcommand("report", "Semidirect-structure report for a splitting");
    report->add_option("file", file, "Algebra JSON")->required();
    report->add_option("--splitting", splitting_text, "Splitting, e.g. i0=1,2")->required();
    report->add_option("--json", json_path, "Write the report JSON here");
    report->callback([&] {
        action = [&] {
            const auto alg = nlie_from_json(read_json_file(file));
            const auto r = semidirect_report_fa(alg, Splitting::from_i0(alg.dim(), parse_splitting_arg(splitting_text)));
            if (!json_path.empty())
                write_text_file(json_path, dump(to_json(r)));
            out << render_report(r);
            return r.all_hold() ? kExitOk : kExitFalse;
        };
    });

    auto* quotient = app.add_subcommand("quotient", "Quotient of a Lie algebra by a coordinate ideal");
    quotient->add_option("file", file, "Lie algebra JSON")->required();
    ideal.attach(quotient);
    quotient->add_option("--out", out_path, "Output file (default stdout)");
    quotient->callback([&] {
        action = [&] {
            const Json doc = read_json_file(file);
            const auto lie = lie_from_json(doc);
            emit(to_json(recheck(quotient_lie(lie, ideal.resolve(doc, lie.dim())))), out_path, out);
            return kExitOk;
        };
    });

    auto* certify = app.add_subcommand("certify-extension", "Certify a central extension of a target algebra");
    certify->add_option("file", file, "Lie algebra JSON of the extension")->required();
    certify->add_option("--target", target_path, "Lie algebra JSON of the target")->required();
    certify->add_option("--map", map_path, "Basis map JSON from the quotient onto the target (default identity)");
    certify->add_option("--json", json_path, "Write the report JSON here");
    ideal.attach(certify);
    certify->callback([&] {
        action = [&] {
            const Json doc = read_json_file(file);
            const auto big = lie_from_json(doc);
            const auto target = lie_from_json(read_json_file(target_path));
            const Subspace sub = ideal.resolve(doc, big.dim());
            const Matrix map = map_path.empty() ? Matrix::identity(big.dim() - sub.dim())
                                                : matrix_from_json(read_json_file(map_path));
            const auto r = certify_central_extension(big, sub, target, map);
            if (!json_path.empty())
                write_text_file(json_path, dump(to_json(r)));
            out << render_report(r);
            return r.all_hold() ? kExitOk : kExitFalse;
        };
    });

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }
    try {
        return action();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitInput;
}

} // namespace filippov
