#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mhl/battery.hpp"
#include "mhl/io.hpp"
#include "mhl/type_a.hpp"
#include "mhl/type_c.hpp"

namespace {

mhl::Partition parse_lambda(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        std::string piece = text.substr(pos, next == std::string::npos ? next : next - pos);
        parts.push_back(std::stoi(piece));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return mhl::Partition(parts);
}

struct SpecPoint {
    mhl::Rational q = 0;
    mhl::Rational t = 0;
};

mhl::Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return mhl::Rational(mhl::Int(s));
    return mhl::Rational(mhl::Int(s.substr(0, slash)), mhl::Int(s.substr(slash + 1)));
}

SpecPoint parse_specialize(const std::string& text) {
    SpecPoint pt;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        std::string piece = text.substr(pos, next == std::string::npos ? next : next - pos);
        auto eq = piece.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--specialize expects q=Q,t=T");
        std::string key = piece.substr(0, eq);
        mhl::Rational val = parse_rational(piece.substr(eq + 1));
        if (key == "q")
            pt.q = val;
        else if (key == "t")
            pt.t = val;
        else
            throw CLI::ValidationError("--specialize expects q=Q,t=T");
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return pt;
}

int run_chain(const std::string& type, const std::string& lambda_text, std::optional<int> n_opt) {
    mhl::Partition lambda = parse_lambda(lambda_text);
    mhl::LambdaChain chain = type == "A" ? mhl::chain_type_a(lambda, n_opt.value_or(lambda.size() + 1))
                                         : mhl::chain_type_c(lambda, n_opt.value_or(lambda.size()));
    std::cout << mhl::chain_dump(chain);
    return 0;
}

int run_compute(const std::string& type, const std::string& lambda_text, int n, const std::string& formula,
                const std::string& format, const std::string& specialize_text) {
    mhl::Partition lambda = parse_lambda(lambda_text);
    mhl::PolyMeta meta{type, lambda.parts(), n, formula};
    mhl::QtPoly poly(n);
    if (type == "A") {
        if (formula == "ramyip")
            poly = mhl::macdonald_ramyip(lambda, n);
        else if (formula == "compressed")
            poly = mhl::macdonald_compressed(lambda, n);
        else
            throw CLI::ValidationError("type A formulas: ramyip, compressed");
    } else {
        if (formula == "schwer")
            poly = mhl::as_qt_poly(mhl::hl_schwer(lambda, n));
        else if (formula == "compressed")
            poly = mhl::as_qt_poly(mhl::hl_compressed(lambda, n));
        else
            throw CLI::ValidationError("type C formulas: schwer, compressed");
    }
    if (!specialize_text.empty()) {
        SpecPoint pt = parse_specialize(specialize_text);
        auto values = mhl::specialize(poly, pt.q, pt.t);
        if (format == "json")
            std::cout << mhl::specialized_to_json(values, meta).dump(2) << "\n";
        else
            std::cout << mhl::specialized_to_text(values) << "\n";
        return 0;
    }
    if (format == "json")
        std::cout << mhl::poly_to_json(poly, meta).dump(2) << "\n";
    else
        std::cout << mhl::poly_to_text(poly) << "\n";
    return 0;
}

int run_compare(const std::string& type, const std::string& lambda_text, int n) {
    mhl::Partition lambda = parse_lambda(lambda_text);
    mhl::QtPoly left(n), right(n);
    std::string left_name, right_name;
    if (type == "A") {
        left = mhl::macdonald_ramyip(lambda, n);
        right = mhl::macdonald_compressed(lambda, n);
        left_name = "ramyip";
        right_name = "compressed";
    } else {
        left = mhl::as_qt_poly(mhl::hl_schwer(lambda, n));
        right = mhl::as_qt_poly(mhl::hl_compressed(lambda, n));
        left_name = "schwer";
        right_name = "compressed";
    }
    if (equal(left, right)) {
        std::cout << "EQUAL\n";
        return 0;
    }
    // report the first differing monomial
    auto il = left.terms().begin();
    auto ir = right.terms().begin();
    while (il != left.terms().end() || ir != right.terms().end()) {
        if (ir == right.terms().end() || (il != left.terms().end() && il->first < ir->first)) {
            std::cout << "DIFFER at x^" << mhl::monomial_to_string(il->first) << ": " << left_name << " has "
                      << il->second.to_string() << ", " << right_name << " has 0\n";
            return 1;
        }
        if (il == left.terms().end() || ir->first < il->first) {
            std::cout << "DIFFER at x^" << mhl::monomial_to_string(ir->first) << ": " << left_name << " has 0, "
                      << right_name << " has " << ir->second.to_string() << "\n";
            return 1;
        }
        if (!frac_equal(il->second, ir->second)) {
            std::cout << "DIFFER at x^" << mhl::monomial_to_string(il->first) << ": " << left_name << " has "
                      << il->second.to_string() << ", " << right_name << " has " << ir->second.to_string() << "\n";
            return 1;
        }
        ++il;
        ++ir;
    }
    std::cout << "EQUAL\n";
    return 0;
}

nlohmann::json pair_json(const mhl::FoldingPair& pair) {
    return {{"w", pair.w.window}, {"J", pair.positions}};
}

int run_fibers(const std::string& type, const std::string& lambda_text, int n, bool dump,
               const std::string& format) {
    mhl::Partition lambda = parse_lambda(lambda_text);
    bool all_ok = true;
    std::size_t fiber_count = 0;
    nlohmann::json jout = nlohmann::json::array();
    auto emit = [&](const nlohmann::json& filling, const std::string& text, std::size_t size, bool ok,
                    const std::string& detail, const nlohmann::json& members) {
        all_ok = all_ok && ok;
        ++fiber_count;
        if (format == "json") {
            nlohmann::json entry = {{"filling", filling}, {"fiber_size", size}, {"ok", ok}};
            if (dump) entry["members"] = members;
            jout.push_back(std::move(entry));
        } else {
            std::cout << "filling\n" << text << "fiber size " << size << ": "
                      << (ok ? "OK" : "FAIL " + detail) << "\n";
            if (dump)
                for (const auto& m : members)
                    std::cout << "  w=" << m.at("w").dump() << " J=" << m.at("J").dump() << "\n";
        }
    };
    if (type == "A") {
        mhl::LambdaChain chain = mhl::chain_type_a(lambda, n);
        for (const auto& [sigma, members] : mhl::fibers(chain)) {
            mhl::FiberReport report = mhl::verify_fiber(chain, sigma, members);
            nlohmann::json ms = nlohmann::json::array();
            for (const auto& pair : members) ms.push_back(pair_json(pair));
            emit(mhl::filling_to_json(sigma), sigma.to_text(), members.size(), report.ok, report.detail, ms);
        }
    } else {
        mhl::LambdaChain chain = mhl::chain_type_c(lambda, n);
        for (const auto& [sigma, members] : mhl::fibers_c(chain)) {
            mhl::FiberReport report = mhl::verify_fiber_c(chain, sigma, members);
            nlohmann::json ms = nlohmann::json::array();
            for (const auto& pair : members) ms.push_back(pair_json(pair));
            emit(mhl::cfilling_to_json(sigma), sigma.to_text(), members.size(), report.ok, report.detail, ms);
        }
    }
    if (format == "json")
        std::cout << jout.dump(2) << "\n";
    else
        std::cout << fiber_count << " fibers\n";
    return all_ok ? 0 : 1;
}

int run_verify(const std::string& suite_name) {
    mhl::Suite suite = suite_name == "full" ? mhl::Suite::Full : mhl::Suite::Quick;
    auto results = mhl::run_battery(suite);
    bool all_ok = true;
    for (const auto& r : results) {
        all_ok = all_ok && r.pass;
        std::printf("%s criterion %d (%s) [%.2fs]%s%s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.seconds, r.detail.empty() ? "" : ": ", r.detail.c_str());
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Macdonald (type A) and Hall-Littlewood (type C) polynomial engines"};
    app.require_subcommand(1);

    std::string type = "A", lambda_text, formula = "compressed", format = "text", specialize_text, suite = "quick";
    int n = 0;
    bool dump = false;

    auto add_type = [&](CLI::App* cmd) {
        cmd->add_option("--type", type, "root system type")->required()->check(CLI::IsMember({"A", "C"}));
    };

    CLI::App* chain_cmd = app.add_subcommand("chain", "print the lambda-chain with factor separators");
    add_type(chain_cmd);
    chain_cmd->add_option("--lambda", lambda_text, "comma separated partition")->required();
    chain_cmd->add_option("--n", n, "rank parameter");

    CLI::App* compute_cmd = app.add_subcommand("compute", "compute a polynomial by one formula");
    add_type(compute_cmd);
    compute_cmd->add_option("--lambda", lambda_text)->required();
    compute_cmd->add_option("--n", n)->required();
    compute_cmd->add_option("--formula", formula)->check(CLI::IsMember({"ramyip", "compressed", "schwer"}));
    compute_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    compute_cmd->add_option("--specialize", specialize_text, "q=Q,t=T exact rational evaluation");

    CLI::App* compare_cmd = app.add_subcommand("compare", "compute both formulas and compare");
    add_type(compare_cmd);
    compare_cmd->add_option("--lambda", lambda_text)->required();
    compare_cmd->add_option("--n", n)->required();

    CLI::App* fibers_cmd = app.add_subcommand("fibers", "list fillings, fiber sizes, verify identities");
    add_type(fibers_cmd);
    fibers_cmd->add_option("--lambda", lambda_text)->required();
    fibers_cmd->add_option("--n", n)->required();
    fibers_cmd->add_flag("--dump", dump, "list the folding pairs of each fiber");
    fibers_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification battery");
    verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (chain_cmd->parsed())
            return run_chain(type, lambda_text, chain_cmd->count("--n") ? std::optional<int>(n) : std::nullopt);
        if (compute_cmd->parsed()) return run_compute(type, lambda_text, n, formula, format, specialize_text);
        if (compare_cmd->parsed()) return run_compare(type, lambda_text, n);
        if (fibers_cmd->parsed()) return run_fibers(type, lambda_text, n, dump, format);
        if (verify_cmd->parsed()) return run_verify(suite);
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const mhl::regularity_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const mhl::shape_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const mhl::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
