// Command-line front end. JSON goes to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 verification failure, 2 bad flags or arguments.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tubehall/closed_forms.hpp"
#include "tubehall/covering.hpp"
#include "tubehall/hall_lie.hpp"
#include "tubehall/orbit_atlas.hpp"

using json = nlohmann::json;
using namespace tubehall;

namespace {

constexpr int kDefaultBound = 8;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_key(const std::string& s) {
    if (s == "z") return kZ;
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size() && v != 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("expected 'z' or a nonzero integer label, got '" + s + "'");
}

std::string key_name(int k) { return k == kZ ? "z" : std::to_string(k); }

json lie_json(const LieElement& e) {
    json u = json::object();
    for (auto [k, c] : e.terms())
        if (k != kZ) u[std::to_string(k)] = c;
    return {{"z", e.coeff(kZ)}, {"u", u}};
}

json quotient_json(const QuotientElement& e) {
    json out = json::object();
    for (const auto& [sym, c] : e)
        out[sym.name()] = c.denominator() == 1 ? std::to_string(c.numerator())
                                                : std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
    return out;
}

FieldSpec hall_field(std::uint32_t q) {
    if (q < 3) throw UsageError("--q must be an odd prime (Z/(q-1) is trivial at q = 2)");
    return FieldSpec(q);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------------------

struct HallArgs {
    std::string variant = "cluster";
    std::uint32_t q = 3;
    int x = 1, l = 1, y = 1;
    int max_length = kDefaultBound;
};

int run_hall(const HallArgs& a) {
    OrbitCategory C(parse_variant(a.variant), hall_field(a.q), a.max_length);
    for (int m : {a.x, a.l, a.y}) C.check_object(m);
    const auto cells = C.orbit_partition(a.x, a.l, a.y);
    emit({{"meta", {{"max_length", a.max_length}}},
          {"variant", a.variant},
          {"q", a.q},
          {"x", a.x},
          {"l", a.l},
          {"y", a.y},
          {"S1", cells.s1},
          {"S2", cells.s2},
          {"S3", cells.s3},
          {"orbits", cells.total()},
          {"F", cells.total() % (a.q - 1)}});
    return 0;
}

struct BracketArgs {
    std::string variant = "cluster";
    std::uint32_t q = 3;
    std::string x, y;
    int max_index = kDefaultBound;
};

int run_bracket(const BracketArgs& a) {
    HallLie H(parse_variant(a.variant), hall_field(a.q), a.max_index);
    const int x = parse_key(a.x), y = parse_key(a.y);
    auto out = lie_json(H.bracket_basis(x, y));
    out["meta"] = {{"max_index", a.max_index}, {"max_length", 2 * a.max_index}};
    out["variant"] = a.variant;
    out["q"] = a.q;
    out["x"] = key_name(x);
    out["y"] = key_name(y);
    emit(out);
    return 0;
}

struct VerifyArgs {
    std::string variant = "cluster";
    std::uint32_t q = 3;
    int max_index = kDefaultBound;
};

int run_verify(const VerifyArgs& a) {
    const auto v = parse_variant(a.variant);
    HallLie H(v, hall_field(a.q), a.max_index);
    json mismatches = json::array();
    std::size_t checked = 0;
    for (int x : basis_keys(a.max_index))
        for (int y : basis_keys(a.max_index)) {
            const auto got = H.bracket_basis(x, y);
            const auto want = closed_basis(v, x, y).reduced(H.modulus());
            ++checked;
            if (!(got == want))
                mismatches.push_back({{"x", key_name(x)}, {"y", key_name(y)}, {"computed", lie_json(got)}, {"expected", lie_json(want)}});
        }
    json center = json::array();
    if (v == Variant::ClusterTube) {
        for (int x = 2; x <= a.max_index; x += 2)
            for (int m : basis_keys(a.max_index)) {
                const auto c = H.bracket_basis(x, m) + H.bracket_basis(-x, m);
                if (!c.is_zero()) center.push_back({{"x", x / 2}, {"m", key_name(m)}, {"value", lie_json(c)}});
            }
    }
    emit({{"meta", {{"max_index", a.max_index}, {"max_length", 2 * a.max_index}}},
          {"variant", a.variant},
          {"q", a.q},
          {"checked", checked},
          {"mismatches", mismatches},
          {"center_failures", center}});
    if (!mismatches.empty() || !center.empty()) {
        std::cerr << "verify-constants: " << mismatches.size() << " mismatches, " << center.size() << " center failures\n";
        return 1;
    }
    return 0;
}

struct QuotientArgs {
    int max_index = 4;
    std::vector<std::uint32_t> primes{3, 5, 7};
    bool closed = false;
};

int run_quotient(const QuotientArgs& a) {
    IntegralTable table;
    json meta = {{"max_index", a.max_index}, {"source", a.closed ? "closed" : "brute"}};
    json errors = json::array();
    if (a.closed) {
        table = closed_table(Variant::ClusterTube, a.max_index);
    } else {
        for (auto p : a.primes) hall_field(p);
        auto lift = lift_integral(Variant::ClusterTube, a.primes, a.max_index);
        table = std::move(lift.table);
        meta["primes"] = a.primes;
        meta["crt_window"] = lift.window;
        for (const auto& e : lift.errors) errors.push_back(e);
    }
    auto br = [&](int x, int y) { return table.at({x, y}); };
    json brackets = json::array();
    json mismatches = json::array();
    try {
        for (const auto& e : quotient_by_center(br, a.max_index)) {
            json row = {{"x", e.s.name()}, {"y", e.t.name()}, {"value", quotient_json(e.value)}};
            if (e.value != quotient_expected(e.s, e.t)) {
                row["expected"] = quotient_json(quotient_expected(e.s, e.t));
                mismatches.push_back(row);
            }
            if (!e.value.empty()) brackets.push_back(row);
        }
    } catch (const std::logic_error& ex) {
        errors.push_back(ex.what());
    }
    emit({{"meta", meta}, {"brackets", brackets}, {"mismatches", mismatches}, {"errors", errors}});
    return mismatches.empty() && errors.empty() ? 0 : 1;
}

struct HeisenbergArgs {
    int max_index = 10;
    std::vector<std::uint32_t> primes{3, 5, 7};
};

int run_heisenberg(const HeisenbergArgs& a) {
    for (auto p : a.primes) hall_field(p);
    // the CRT window (-M/2, M/2] must contain -n for every coefficient -n of [u_n, u_-n]
    std::int64_t window = 1;
    for (auto p : a.primes) window = std::lcm<std::int64_t>(window, p - 1);
    const int lift_bound = std::min<int>(a.max_index, static_cast<int>((window - 1) / 2));
    json failures = json::array();
    json lifted_mismatches = json::array();
    if (lift_bound >= 1) {
        const auto lift = lift_integral(Variant::RootCategory, a.primes, lift_bound);
        for (const auto& e : lift.errors) failures.push_back(e);
        for (const auto& [key, value] : lift.table)
            if (!(value == closed_basis(Variant::RootCategory, key.first, key.second)))
                lifted_mismatches.push_back({{"x", key_name(key.first)}, {"y", key_name(key.second)}, {"lifted", lie_json(value)}});
        for (const auto& f : heisenberg_check([&](int x, int y) { return lift.table.at({x, y}); }, lift_bound).failures)
            failures.push_back("lifted: " + f);
    }
    for (const auto& f : heisenberg_check([](int x, int y) { return closed_basis(Variant::RootCategory, x, y); }, a.max_index).failures)
        failures.push_back("closed form: " + f);
    emit({{"meta", {{"max_index", a.max_index}, {"primes", a.primes}, {"crt_window", window}, {"lifted_up_to", lift_bound}}},
          {"chevalley_basis", "e_n = -(1/n) u_n, f_n = u_-n, z"},
          {"lifted_mismatches", lifted_mismatches},
          {"failures", failures},
          {"ok", failures.empty() && lifted_mismatches.empty()}});
    return failures.empty() && lifted_mismatches.empty() ? 0 : 1;
}

struct ClassifyArgs {
    int w = 2, n = 2;
    std::string a = "1", b = "1";
    std::string field = "q";
};

RationalField::value parse_rational(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return RationalField::value(std::stoll(s));
        const auto den = std::stoll(s.substr(slash + 1));
        if (den == 0) throw UsageError("zero denominator in '" + s + "'");
        return RationalField::value(std::stoll(s.substr(0, slash)), den);
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("cannot parse scalar '" + s + "'");
    }
}

template <class K>
json classify_with(const K& k, const ClassifyArgs& args, typename K::value a, typename K::value b) {
    if (k.is_zero(a) || k.is_zero(b)) throw UsageError("--a and --b must be nonzero in " + k.name());
    const auto p = derive_params(k, args.w, args.n, a, b);
    const auto& inv = p.inv;
    const auto P = lambda_tilde(k, args.w, a, args.n);
    const auto P2 = lambda_tilde_prime(k, inv.n_prime, b, inv.d_prime, inv.m);
    auto pres = [&](const GradedPresentation<K>& g) {
        return json{{"deg_s", g.deg_s}, {"deg_r", g.deg_r}, {"lambda", k.str(g.lambda)}};
    };
    const auto shape = ar_shape(inv);
    return {{"field", k.name()},
            {"w", args.w},
            {"n", args.n},
            {"a", k.str(a)},
            {"b", k.str(b)},
            {"d", inv.d},
            {"m", inv.m},
            {"n_prime", inv.n_prime},
            {"d_prime", inv.d_prime},
            {"c", inv.c},
            {"equivalent", equivalent(k, p)},
            {"presentations_isomorphic", presentations_isomorphic(k, P, P2)},
            {"parity_identity", parity_identity(inv)},
            {"presentation", pres(P)},
            {"presentation_prime", pres(P2)},
            {"ar_shape", {{"tubes", shape.first}, {"rank", shape.second}}}};
}

int run_classify(const ClassifyArgs& a) {
    if (a.n < 1) throw UsageError("--n must be positive");
    json out;
    if (a.field == "q") {
        out = classify_with(RationalField{}, a, parse_rational(a.a), parse_rational(a.b));
    } else if (a.field.size() > 1 && a.field[0] == 'p') {
        std::uint32_t p = 0;
        try {
            p = static_cast<std::uint32_t>(std::stoul(a.field.substr(1)));
        } catch (const std::exception&) {
            throw UsageError("bad --field '" + a.field + "' (expected q or pP)");
        }
        const ModularField k{FieldSpec(p)};
        auto parse = [&](const std::string& s) {
            try {
                return k.from_int(std::stoll(s));
            } catch (const std::exception&) {
                throw UsageError("cannot parse scalar '" + s + "'");
            }
        };
        out = classify_with(k, a, parse(a.a), parse(a.b));
    } else {
        throw UsageError("bad --field '" + a.field + "' (expected q or pP)");
    }
    emit(out);
    return 0;
}

struct ArQuiverArgs {
    int w = 2, n = 2;
    int height = 4;
    bool dot = false;
};

int run_ar_quiver(const ArQuiverArgs& a) {
    if (a.n < 1 || a.height < 1) throw UsageError("--n and --height must be positive");
    const auto inv = derive_invariants(a.w, a.n);
    const auto [tubes, rank] = ar_shape(inv);
    if (a.dot) {
        std::cout << ar_quiver_dot(tubes, rank, a.height);
        return 0;
    }
    emit({{"meta", {{"height", a.height}}}, {"w", a.w}, {"n", a.n}, {"tubes", tubes}, {"rank", rank}, {"vertices", tubes * rank * a.height}});
    return 0;
}

struct CoverArgs {
    int d = -1, n = 2;
    int window = 50;
    bool dot = false;
};

int run_cover(const CoverArgs& a) {
    if (a.n < 1 || a.window < 0) throw UsageError("--n must be positive and --window non-negative");
    if (a.d == 0) throw UsageError("--d must be nonzero");
    const CoverContext ctx(a.d, a.n);
    if (a.dot) {
        std::cout << cover_dot(ctx, a.window);
        return 0;
    }
    const auto rep = check_diagrams(ctx, a.window);
    bool adds_c = true;
    for (int j = 0; j < ctx.m; ++j)
        for (int i = 0; i < ctx.n_prime; ++i) {
            VertexBarQ v{j, i};
            for (int k = 0; k < ctx.m; ++k) v = bar_sigma(ctx, v);
            adds_c &= v == VertexBarQ{j, static_cast<int>(floor_mod(i + ctx.c, ctx.n_prime))};
        }
    DimQ probe;
    for (int j = 0; j < ctx.abs_d(); ++j) probe[{j, j - 1}] = 1 + j;
    const auto sums = orbit_sum_dims(ctx, probe, std::min(a.window, 20));
    json violations = rep.violations;
    const bool ok = rep.ok() && adds_c && sums.ok();
    emit({{"meta", {{"window", a.window}}},
          {"d", a.d},
          {"n", a.n},
          {"m", ctx.m},
          {"n_prime", ctx.n_prime},
          {"c", ctx.c},
          {"vertices_checked", rep.vertices_checked},
          {"violations", violations},
          {"bar_sigma_m_adds_c", adds_c},
          {"orbit_sum_identity", sums.ok()},
          {"ok", ok}});
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ringel-Hall Lie algebras of the rank-2 cluster tube and the root category of T_1"};
    app.require_subcommand(1);

    HallArgs hall;
    auto* h = app.add_subcommand("hall", "Hall number F^L_{YX} with its S1/S2/S3 split");
    h->add_option("--variant", hall.variant, "cluster or root")->capture_default_str();
    h->add_option("--q", hall.q, "field size (odd prime)")->capture_default_str();
    h->add_option("--x", hall.x, "label of X")->required();
    h->add_option("--l", hall.l, "label of L")->required();
    h->add_option("--y", hall.y, "label of Y")->required();
    h->add_option("--max-length", hall.max_length, "module length bound")->capture_default_str();

    BracketArgs bracket;
    auto* b = app.add_subcommand("bracket", "brute-force bracket of two basis elements");
    b->add_option("--variant", bracket.variant, "cluster or root")->capture_default_str();
    b->add_option("--q", bracket.q, "field size (odd prime)")->capture_default_str();
    b->add_option("--x", bracket.x, "first basis element: z or a label")->required();
    b->add_option("--y", bracket.y, "second basis element: z or a label")->required();
    b->add_option("--max-index", bracket.max_index, "index bound")->capture_default_str();

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify-constants", "compare brute-force brackets with the closed forms");
    v->add_option("--variant", verify.variant, "cluster or root")->capture_default_str();
    v->add_option("--q", verify.q, "field size (odd prime)")->capture_default_str();
    v->add_option("--max", verify.max_index, "index bound")->capture_default_str();

    QuotientArgs quotient;
    auto* qu = app.add_subcommand("quotient", "brackets of the cluster tube algebra modulo its center");
    qu->add_option("--max", quotient.max_index, "index bound of the integral table")->capture_default_str();
    qu->add_option("--primes", quotient.primes, "primes for the integral lift")->delimiter(',')->capture_default_str();
    qu->add_flag("--closed", quotient.closed, "use the closed-form table instead of brute force");

    HeisenbergArgs heis;
    auto* he = app.add_subcommand("heisenberg", "Chevalley basis check for the root category algebra");
    he->add_option("--max", heis.max_index, "index bound")->capture_default_str();
    he->add_option("--primes", heis.primes, "primes for the integral lift")->delimiter(',')->capture_default_str();

    ClassifyArgs cls;
    auto* c = app.add_subcommand("classify", "equivalence test for the orbit categories S_w / S^n and T_n");
    c->add_option("--w", cls.w)->required();
    c->add_option("--n", cls.n)->required();
    c->add_option("--a", cls.a)->capture_default_str();
    c->add_option("--b", cls.b)->capture_default_str();
    c->add_option("--field", cls.field, "q for the rationals, pP for F_P")->capture_default_str();

    ArQuiverArgs arq;
    auto* ar = app.add_subcommand("ar-quiver", "shape of the AR quiver, optionally as DOT");
    ar->add_option("--w", arq.w)->required();
    ar->add_option("--n", arq.n)->required();
    ar->add_option("--height", arq.height, "tube height to draw")->capture_default_str();
    ar->add_flag("--dot", arq.dot, "print DOT instead of JSON");

    CoverArgs cov;
    auto* co = app.add_subcommand("cover", "covering Q -> Qbar and its commuting diagrams");
    co->add_option("--d", cov.d)->required();
    co->add_option("--n", cov.n)->required();
    co->add_option("--window", cov.window, "checked range |i| <= W")->capture_default_str();
    co->add_flag("--dot", cov.dot, "print DOT instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*h) return run_hall(hall);
        if (*b) return run_bracket(bracket);
        if (*v) return run_verify(verify);
        if (*qu) return run_quotient(quotient);
        if (*he) return run_heisenberg(heis);
        if (*c) return run_classify(cls);
        if (*ar) return run_ar_quiver(arq);
        if (*co) return run_cover(cov);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
