#include "nambu/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "nambu/flows.hpp"
#include "nambu/hamfields.hpp"
#include "nambu/parse.hpp"
#include "nambu/random.hpp"
#include "nambu/serialize.hpp"

namespace nambu::cli {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool mentions_xyz(const std::vector<std::string>& texts) {
    for (const auto& text : texts) {
        for (std::size_t i = 0; i < text.size();) {
            if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            const auto ident = text.substr(i, j - i);
            if (ident == "x" || ident == "y" || ident == "z") return true;
            i = j;
        }
    }
    return false;
}

// x0..x{n-1}; in three dimensions x, y, z are accepted too, and become the
// printed names when the inputs are written with them.
CoordsPtr coords_for(int n, const std::vector<std::string>& texts) {
    if (n < 1) throw UsageError("dimension must be positive");
    auto standard = Coords::standard(static_cast<std::size_t>(n));
    if (n != 3) return standard;
    std::vector<std::string> xyz{"x", "y", "z"};
    if (mentions_xyz(texts)) return Coords::make(xyz, standard->names());
    return Coords::make(standard->names(), xyz);
}

void check_dim(int n) {
    if (n < 2 || n > 8) throw UsageError("--dim must lie in 2..8");
}

void check_grade(int n, int k) {
    if (k < 1 || k > n - 1) throw UsageError("--grade must lie in 1..dim-1");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const CoordsPtr& coords) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse_polynomial(t, coords));
    return out;
}

template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < count;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

struct VerifyArgs {
    int dim = 0;
    int grade = 0;
    std::optional<std::string> hamiltonian;
    std::optional<int> random;
    int degree = 3;
    std::uint64_t seed = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    check_dim(a.dim);
    check_grade(a.dim, a.grade);
    if (a.hamiltonian.has_value() == a.random.has_value()) throw UsageError("give exactly one of --hamiltonian or --random");
    std::vector<Polynomial> hs;
    if (a.hamiltonian) {
        hs.push_back(parse_polynomial(*a.hamiltonian, coords_for(a.dim, {*a.hamiltonian})));
    } else {
        if (*a.random < 1) throw UsageError("--random must be positive");
        if (a.degree < 0) throw UsageError("--degree must be non-negative");
        const auto coords = Coords::standard(static_cast<std::size_t>(a.dim));
        PolyRng rng(a.seed);
        for (int i = 0; i < *a.random; ++i) hs.push_back(rng.polynomial(coords, static_cast<unsigned>(a.degree)));
    }
    std::vector<std::string> lines(hs.size());
    std::vector<char> passed(hs.size(), 0);
    parallel_for(hs.size(), [&](std::size_t i) {
        const auto cert = liouville_check(hs[i], static_cast<std::size_t>(a.grade));
        lines[i] = dump(cert.to_json());
        passed[i] = cert.pass;
    });
    for (const auto& l : lines) out << l << '\n';
    return std::all_of(passed.begin(), passed.end(), [](char p) { return p != 0; }) ? kPass : kVerificationFailed;
}

int cmd_bracket(int dim, const std::string& hamiltonians, const std::optional<std::string>& target, std::ostream& out) {
    check_dim(dim);
    auto texts = split(hamiltonians, ';');
    if (target) texts.push_back(*target);
    if (texts.size() < 2) throw UsageError("a bracket needs H and at least one argument");
    const std::size_t k = texts.size() - 1;
    if (k > static_cast<std::size_t>(dim - 1)) throw UsageError("bracket arity exceeds dim-1");
    const auto polys = parse_all(texts, coords_for(dim, texts));
    const std::vector<Polynomial> fs(polys.begin() + 1, polys.end());
    out << nambu_bracket(polys.front(), fs).to_string() << '\n';
    return kPass;
}

int cmd_field(int dim, int grade, const std::string& hamiltonian, std::ostream& out) {
    check_dim(dim);
    check_grade(dim, grade);
    const auto h = parse_polynomial(hamiltonian, coords_for(dim, {hamiltonian}));
    out << dump(to_json(hamiltonian_kvector(h, static_cast<std::size_t>(grade)))) << '\n';
    return kPass;
}

int cmd_potential(int dim, const std::string& path, std::ostream& out, std::ostream& err) {
    check_dim(dim);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open form file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw UsageError(std::string("form file is not valid JSON: ") + e.what());
    }
    const KForm form = kform_from_json(j);
    if (form.dimension() != static_cast<std::size_t>(dim)) throw UsageError("form coordinates do not match --dim");
    if (form.grade() == 0) throw PreconditionError("potential needs a form of grade >= 1");
    const KForm residual = d(form);
    if (!residual.is_zero()) {
        err << "form is not closed; d(form) =\n" << dump(to_json(residual)) << '\n';
        return kPrecondition;
    }
    out << dump(to_json(homotopy(form))) << '\n';
    return kPass;
}

struct IntegrateArgs {
    int dim = 0;
    std::string hamiltonians;
    std::string init;
    double t_end = 0;
    double step = 1e-3;
    std::string out;
};

int cmd_integrate(const IntegrateArgs& a, std::ostream& out) {
    check_dim(a.dim);
    const auto texts = split(a.hamiltonians, ';');
    if (texts.size() != static_cast<std::size_t>(a.dim - 1)) throw UsageError("integrate needs exactly dim-1 Hamiltonians");
    const auto coords = coords_for(a.dim, texts);
    std::vector<double> init;
    for (const auto& v : split(a.init, ',')) {
        try {
            std::size_t used = 0;
            init.push_back(std::stod(v, &used));
            if (used != v.size() && v.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(v);
        } catch (const std::exception&) {
            throw UsageError("bad --init value '" + v + "'");
        }
    }
    FlowSpec spec{NambuSystem(parse_all(texts, coords)), init, a.t_end, a.step};
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const Trajectory traj = integrate(spec);
    std::ofstream csv(a.out);
    if (!csv) throw UsageError("cannot write '" + a.out + "'");
    write_csv(csv, traj);
    char buf[64];
    for (std::size_t j = 0; j < traj.drift.size(); ++j) {
        std::snprintf(buf, sizeof buf, "%.17g", traj.drift[j]);
        out << "drift I" << j + 1 << " = " << buf << '\n';
    }
    return kPass;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact exterior calculus for Nambu mechanics"};
    app.require_subcommand(1, 1);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check the Liouville identity for Hamiltonian k-vector fields");
    verify->add_option("--dim", va.dim, "phase-space dimension")->required();
    verify->add_option("--grade", va.grade, "field grade k")->required();
    auto* ham_opt = verify->add_option("--hamiltonian", va.hamiltonian, "Hamiltonian expression");
    auto* rnd_opt = verify->add_option("--random", va.random, "number of random Hamiltonians");
    ham_opt->excludes(rnd_opt);
    verify->add_option("--degree", va.degree, "max degree of random Hamiltonians")->capture_default_str();
    verify->add_option("--seed", va.seed, "random seed")->capture_default_str();

    int b_dim = 0;
    std::string b_hams;
    std::optional<std::string> b_target;
    auto* bracket = app.add_subcommand("bracket", "evaluate {H, F1, ..., Fk}");
    bracket->add_option("--dim", b_dim)->required();
    bracket->add_option("--hamiltonians", b_hams, "\"H;F1;...;Fk\"")->required();
    bracket->add_option("--target", b_target, "last bracket argument");

    int f_dim = 0, f_grade = 0;
    std::string f_ham;
    auto* field = app.add_subcommand("field", "construct the Hamiltonian k-vector field as JSON");
    field->add_option("--dim", f_dim)->required();
    field->add_option("--grade", f_grade)->required();
    field->add_option("--hamiltonian", f_ham)->required();

    int p_dim = 0;
    std::string p_form;
    auto* potential = app.add_subcommand("potential", "homotopy primitive of a closed form");
    potential->add_option("--dim", p_dim)->required();
    potential->add_option("--form", p_form, "KForm JSON file")->required();

    IntegrateArgs ia;
    auto* integ = app.add_subcommand("integrate", "integrate a Nambu flow to CSV");
    integ->add_option("--dim", ia.dim)->required();
    integ->add_option("--hamiltonians", ia.hamiltonians, "\"H1;...;H{n-1}\"")->required();
    integ->add_option("--init", ia.init, "comma separated initial state")->required();
    integ->add_option("--t-end", ia.t_end)->required();
    integ->add_option("--step", ia.step)->capture_default_str();
    integ->add_option("--out", ia.out, "CSV output path")->required();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*verify) return cmd_verify(va, out);
        if (*bracket) return cmd_bracket(b_dim, b_hams, b_target, out);
        if (*field) return cmd_field(f_dim, f_grade, f_ham, out);
        if (*potential) return cmd_potential(p_dim, p_form, out, err);
        if (*integ) return cmd_integrate(ia, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kPrecondition;
    } catch (const NonFiniteState& e) {
        err << "error: " << e.what() << '\n';
        return kPrecondition;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace nambu::cli
