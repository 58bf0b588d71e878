#include "bellswap/states.hpp"

#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "bellswap/errors.hpp"

namespace bellswap {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_range(double v, double lo, double hi, const char* name) {
    if (!(v >= lo && v <= hi)) {
        std::ostringstream os;
        os << name << " = " << v << " outside [" << lo << ", " << hi << "]";
        throw domain_error(os.str());
    }
}

DensityMatrix projector(const std::array<std::complex<double>, 4>& v) {
    ComplexMatrix m(4);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            m.set(r, c, v[static_cast<std::size_t>(r)] * std::conj(v[static_cast<std::size_t>(c)]));
        }
    }
    return validate_density(m);
}

}  // namespace

std::string_view to_string(BellLabel label) {
    switch (label) {
        case BellLabel::b00: return "b00";
        case BellLabel::b01: return "b01";
        case BellLabel::b10: return "b10";
        case BellLabel::b11: return "b11";
    }
    return "?";
}

BellLabel bell_label_from_string(std::string_view s) {
    for (BellLabel l : kBellLabels) {
        if (s == to_string(l)) return l;
    }
    throw parse_error("unknown Bell label: " + std::string(s));
}

std::array<std::complex<double>, 4> bell_vector(BellLabel label) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (label) {
        case BellLabel::b00: return {r, 0.0, 0.0, r};    // |phi+>
        case BellLabel::b01: return {r, 0.0, 0.0, -r};   // |phi->
        case BellLabel::b10: return {0.0, r, r, 0.0};    // |psi+>
        case BellLabel::b11: return {0.0, r, -r, 0.0};   // |psi->
    }
    return {};
}

DensityMatrix werner(double alpha) {
    require_range(alpha, 0.0, 1.0, "alpha");
    ComplexMatrix m(4);
    const double bg = (1.0 - alpha) / 4.0;
    for (int i = 0; i < 4; ++i) m.re_at(i, i) = bg;
    // singlet projector carries 1/2 on the |01>,|10> block
    m.re_at(1, 1) += alpha / 2.0;
    m.re_at(2, 2) += alpha / 2.0;
    m.re_at(1, 2) -= alpha / 2.0;
    m.re_at(2, 1) -= alpha / 2.0;
    return validate_density(m);
}

DensityMatrix x_state(const XStateParams& s) {
    const double sum = s.a + s.b + s.c + s.d;
    if (std::abs(sum - 1.0) > 1e-12) {
        throw domain_error("x_state: a+b+c+d = " + std::to_string(sum) + ", expected 1");
    }
    for (auto [v, name] : {std::pair{s.a, "a"}, {s.b, "b"}, {s.c, "c"}, {s.d, "d"}}) {
        if (v < -1e-12) {
            throw domain_error(std::string("x_state: population ") + name + " is negative");
        }
    }
    if (s.p * s.p > s.a * s.d + 1e-12) {
        throw domain_error("x_state: p^2 <= a*d violated");
    }
    if (s.q * s.q > s.b * s.c + 1e-12) {
        throw domain_error("x_state: q^2 <= b*c violated");
    }
    ComplexMatrix m(4);
    m.re_at(0, 0) = s.a;
    m.re_at(1, 1) = s.b;
    m.re_at(2, 2) = s.c;
    m.re_at(3, 3) = s.d;
    m.re_at(0, 3) = s.p;
    m.re_at(3, 0) = s.p;
    m.re_at(1, 2) = s.q;
    m.re_at(2, 1) = s.q;
    return validate_density(m);
}

DensityMatrix diag_state(double a, double b, double c, double d) {
    return x_state({a, b, c, d, 0.0, 0.0});
}

DensityMatrix gisin(double lambda, double alpha) {
    require_range(lambda, 0.0, 1.0, "lambda");
    require_range(alpha, 0.0, kPi / 4.0, "alpha");
    const double sn = std::sin(alpha), cs = std::cos(alpha);
    ComplexMatrix m(4);
    m.re_at(0, 0) = (1.0 - lambda) / 2.0;
    m.re_at(3, 3) = (1.0 - lambda) / 2.0;
    m.re_at(1, 1) = lambda * sn * sn;
    m.re_at(2, 2) = lambda * cs * cs;
    m.re_at(1, 2) = lambda * sn * cs;
    m.re_at(2, 1) = lambda * sn * cs;
    return validate_density(m);
}

DensityMatrix lhv_state(double gamma, double beta) {
    require_range(gamma, 0.0, 1.0, "gamma");
    require_range(beta, 0.0, kPi / 2.0, "beta");
    const double sn = std::sin(beta), cs = std::cos(beta);
    ComplexMatrix m(4);
    m.re_at(0, 0) = 1.0 - gamma;
    m.re_at(1, 1) = gamma * cs * cs;
    m.re_at(2, 2) = gamma * sn * sn;
    m.re_at(1, 2) = -gamma * sn * cs;
    m.re_at(2, 1) = -gamma * sn * cs;
    return validate_density(m);
}

DensityMatrix bell_state(BellLabel label) { return projector(bell_vector(label)); }

DensityMatrix bell_diagonal(double p1, double p2, double p3, double p4) {
    const std::array<double, 4> p{p1, p2, p3, p4};
    double sum = 0.0;
    for (double v : p) {
        if (v < -1e-12) throw domain_error("bell_diagonal: negative weight");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw domain_error("bell_diagonal: weights sum to " + std::to_string(sum));
    }
    ComplexMatrix m(4);
    for (int i = 0; i < 4; ++i) {
        accumulate(m, bell_state(kBellLabels[static_cast<std::size_t>(i)]).mat(),
                   p[static_cast<std::size_t>(i)]);
    }
    return validate_density(m);
}

DensityMatrix random_density(std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    auto uniform = [&] {
        return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;  // (0,1)
    };
    double cache = 0.0;
    bool have_cache = false;
    auto normal = [&] {
        if (have_cache) {
            have_cache = false;
            return cache;
        }
        const double u1 = uniform(), u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        cache = r * std::sin(2.0 * kPi * u2);
        have_cache = true;
        return r * std::cos(2.0 * kPi * u2);
    };

    ComplexMatrix g(4);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            g.re_at(r, c) = normal();
            g.im_at(r, c) = normal();
        }
    }
    ComplexMatrix rho = mul(g, g.adjoint());
    const double tr = rho.trace().real();
    ComplexMatrix out(4);
    accumulate(out, rho, 1.0 / tr);
    return validate_density(out);
}

DensityMatrix parse_state_spec(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw parse_error("state spec needs the form family:params, got '" +
                          std::string(spec) + "'");
    }
    const std::string_view family = spec.substr(0, colon);
    const std::string_view rest = spec.substr(colon + 1);

    if (family == "bell") return bell_state(bell_label_from_string(rest));

    std::map<std::string, double, std::less<>> kv;
    std::size_t pos = 0;
    while (pos < rest.size()) {
        auto end = rest.find(',', pos);
        if (end == std::string_view::npos) end = rest.size();
        const std::string_view item = rest.substr(pos, end - pos);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0) {
            throw parse_error("bad key=value item '" + std::string(item) + "' in state spec");
        }
        const std::string key(item.substr(0, eq));
        const std::string val(item.substr(eq + 1));
        char* parse_end = nullptr;
        const double x = std::strtod(val.c_str(), &parse_end);
        if (val.empty() || parse_end != val.c_str() + val.size()) {
            throw parse_error("bad numeric value '" + val + "' for " + key);
        }
        if (!kv.emplace(key, x).second) {
            throw parse_error("duplicate key '" + key + "' in state spec");
        }
        pos = end + 1;
    }

    auto take = [&](const char* key) {
        auto it = kv.find(key);
        if (it == kv.end()) {
            throw parse_error(std::string(family) + " spec is missing key '" + key + "'");
        }
        const double v = it->second;
        kv.erase(it);
        return v;
    };
    auto finish = [&] {
        if (!kv.empty()) {
            throw parse_error("unknown key '" + kv.begin()->first + "' for family '" +
                              std::string(family) + "'");
        }
    };

    if (family == "werner") {
        const double a = take("alpha");
        finish();
        return werner(a);
    }
    if (family == "gisin") {
        const double l = take("lambda"), a = take("alpha");
        finish();
        return gisin(l, a);
    }
    if (family == "x") {
        XStateParams p;
        p.a = take("a");
        p.b = take("b");
        p.c = take("c");
        p.d = take("d");
        p.p = take("p");
        p.q = take("q");
        finish();
        return x_state(p);
    }
    if (family == "diag") {
        const double a = take("a"), b = take("b"), c = take("c"), d = take("d");
        finish();
        return diag_state(a, b, c, d);
    }
    if (family == "lhv") {
        const double g = take("gamma"), b = take("beta");
        finish();
        return lhv_state(g, b);
    }
    throw parse_error("unknown state family: " + std::string(family));
}

}  // namespace bellswap
