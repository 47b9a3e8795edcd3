#include "quivmod/catalog.hpp"

#include <charconv>
#include <numeric>

#include "quivmod/error.hpp"

namespace quivmod {

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

Matrix square(std::size_t n, std::int64_t fill = 0) { return Matrix(n, std::vector<std::int64_t>(n, fill)); }

[[noreturn]] void bad_params(const std::string& family, const std::string& why) {
    throw InvalidInput("bad_example_params", family + ": " + why);
}

void expect_count(const std::string& family, const std::vector<std::int64_t>& p, std::size_t n) {
    if (p.size() != n) bad_params(family, "expected " + std::to_string(n) + " parameters, got " + std::to_string(p.size()));
}

Example two_vertex(std::string family, std::vector<std::int64_t> params, std::int64_t m, std::int64_t n) {
    Example ex;
    ex.family = std::move(family);
    ex.params = std::move(params);
    ex.quiver = Quiver({"i", "j"}, {{0, m}, {n, 0}});
    ex.d = {1, 1};
    return ex;
}

Example determinantal(const std::vector<std::int64_t>& p) {
    expect_count("determinantal", p, 2);
    const std::int64_t m = p[0], r = p[1];
    if (m < 1 || r < 1 || r > m) bad_params("determinantal", "need 1 <= r <= m");
    Example ex = two_vertex("determinantal", p, m, m);
    ex.d = {1, r};
    ex.theta = Stability::zero(2);
    ex.theta_prime = Stability{r, -1};
    ex.assume_nonempty = true;
    return ex;
}

Example points(const std::vector<std::int64_t>& p) {
    expect_count("points", p, 2);
    const std::int64_t m = p[0], d = p[1];
    if (m < 1 || d < 2) bad_params("points", "need m >= 1 and d >= 2");
    const auto n = static_cast<std::size_t>(m);
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= n; ++k) names.push_back("i" + std::to_string(k));
    names.push_back("j");
    Matrix arrows = square(n + 1);
    for (std::size_t k = 0; k < n; ++k) arrows[k][n] = 1;

    Example ex;
    ex.family = "points";
    ex.params = p;
    ex.quiver = Quiver(std::move(names), std::move(arrows));
    std::vector<std::int64_t> dims(n, 1), theta(n, d), theta_prime(n, d * d);
    dims.push_back(d);
    theta.push_back(-m);
    theta_prime[0] = d * d + d;
    theta_prime.push_back(-(m * d + 1));
    ex.d = DimVector(std::move(dims));
    ex.theta = Stability(std::move(theta));
    ex.theta_prime = Stability(std::move(theta_prime));
    ex.assume_nonempty = m > d;
    return ex;
}

Example levi_adjoint(const std::vector<std::int64_t>& p) {
    if (p.empty()) bad_params("levi_adjoint", "expected l followed by optional dimensions");
    const std::int64_t l = p[0];
    if (l < 1) bad_params("levi_adjoint", "need l >= 1");
    const auto n = static_cast<std::size_t>(l);
    std::vector<std::int64_t> dims(n, 1);
    if (p.size() > 1) {
        if (p.size() != n + 1) bad_params("levi_adjoint", "expected l dimensions after l");
        dims.assign(p.begin() + 1, p.end());
        for (std::int64_t x : dims) {
            if (x < 1) bad_params("levi_adjoint", "dimensions must be positive");
        }
    }
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= n; ++k) names.push_back("i" + std::to_string(k));

    Example ex;
    ex.family = "levi_adjoint";
    ex.params = p;
    ex.quiver = Quiver(std::move(names), square(n, 1));
    const bool ones = std::all_of(dims.begin(), dims.end(), [](std::int64_t x) { return x == 1; });
    ex.d = DimVector(std::move(dims));
    ex.theta = Stability::zero(n);
    if (ones) {
        std::vector<std::int64_t> w(n, -1);
        w[0] = l - 1;
        ex.theta_prime = Stability(std::move(w));
    }
    ex.assume_nonempty = true;
    return ex;
}

Example bipartite(const std::vector<std::int64_t>& p) {
    if (p.size() < 2) bad_params("bipartite", "expected k,l followed by k + l dimensions");
    const std::int64_t k = p[0], l = p[1];
    if (k < 1 || l < 1) bad_params("bipartite", "need k, l >= 1");
    const auto nk = static_cast<std::size_t>(k), nl = static_cast<std::size_t>(l);
    if (p.size() != 2 + nk + nl) bad_params("bipartite", "expected k + l dimensions after k,l");
    std::vector<std::int64_t> dims(p.begin() + 2, p.end());
    for (std::int64_t x : dims) {
        if (x < 1) bad_params("bipartite", "dimensions must be positive");
    }
    const std::int64_t dim_v = std::accumulate(dims.begin(), dims.begin() + k, std::int64_t{0});
    const std::int64_t dim_w = std::accumulate(dims.begin() + k, dims.end(), std::int64_t{0});

    std::vector<std::string> names;
    for (std::size_t a = 1; a <= nk; ++a) names.push_back("i" + std::to_string(a));
    for (std::size_t b = 1; b <= nl; ++b) names.push_back("j" + std::to_string(b));
    Matrix arrows = square(nk + nl);
    std::vector<std::int64_t> theta;
    for (std::size_t a = 0; a < nk; ++a) {
        for (std::size_t b = 0; b < nl; ++b) arrows[a][nk + b] = 1;
        theta.push_back(dim_w);
    }
    for (std::size_t b = 0; b < nl; ++b) theta.push_back(-dim_v);

    Example ex;
    ex.family = "bipartite";
    ex.params = p;
    ex.quiver = Quiver(std::move(names), std::move(arrows));
    ex.d = DimVector(std::move(dims));
    ex.theta = Stability(std::move(theta));
    return ex;
}

Example abelianized(const std::vector<std::int64_t>& p) {
    expect_count("abelianized", p, 4);
    const std::int64_t m = p[0], n = p[1], a = p[2], b = p[3];
    if (m < 0 || n < 0 || a < 1 || b < 1) bad_params("abelianized", "need m, n >= 0 and a, b >= 1");
    const std::int64_t g = std::gcd(a, b);
    const Quiver base({"i", "j"}, {{0, m}, {n, 0}});
    LocalQuiver ab = abelianized_quiver(base, DimVector{a, b}, Stability{b / g, -a / g});
    Example ex;
    ex.family = "abelianized";
    ex.params = p;
    ex.quiver = std::move(ab.quiver);
    ex.d = std::move(ab.d);
    ex.theta = std::move(ab.theta);
    return ex;
}

Example kronecker_general(const std::vector<std::int64_t>& p) {
    expect_count("kronecker_general", p, 2);
    if (p[0] < 1 || p[1] < 0) bad_params("kronecker_general", "need m >= 1 and n >= 0");
    Example ex = two_vertex("kronecker_general", p, p[0], p[1]);
    ex.theta = Stability::zero(2);
    ex.theta_prime = Stability{1, -1};
    ex.assume_nonempty = true;
    return ex;
}

Example kronecker(const std::vector<std::int64_t>& p) {
    expect_count("kronecker", p, 1);
    if (p[0] < 1) bad_params("kronecker", "need m >= 1");
    Example ex = two_vertex("kronecker", p, p[0], 0);
    ex.theta = Stability{1, -1};
    ex.assume_nonempty = true;
    return ex;
}

}  // namespace

const std::vector<FamilyInfo>& list_families() {
    static const std::vector<FamilyInfo> families = {
        {"determinantal", "m,r", "2 vertices, m arrows each way, d=(1,r), theta=0, theta'=(r,-1)"},
        {"points", "m,d", "star with m sources, d=(1,...,1,d): ordered points in P^(d-1)"},
        {"levi_adjoint", "l[,d1,...,dl]", "complete quiver with loops on l vertices, theta=0"},
        {"bipartite", "k,l,v1..vk,w1..wl", "complete bipartite quiver, theta(i)=dim W, theta(j)=-dim V"},
        {"abelianized", "m,n,a,b", "abelianization of the (m,n) Kronecker quiver at d=(a,b), theta=(b,-a)/gcd"},
        {"kronecker_general", "m,n", "m arrows i->j, n arrows j->i, d=(1,1), theta=0, theta'=(1,-1)"},
        {"kronecker", "m", "m arrows i->j, d=(1,1), theta=(1,-1)"},
    };
    return families;
}

Example build_example(const std::string& family, const std::vector<std::int64_t>& params) {
    if (family == "determinantal") return determinantal(params);
    if (family == "points") return points(params);
    if (family == "levi_adjoint") return levi_adjoint(params);
    if (family == "bipartite") return bipartite(params);
    if (family == "abelianized") return abelianized(params);
    if (family == "kronecker_general") return kronecker_general(params);
    if (family == "kronecker") return kronecker(params);
    throw InvalidInput("unknown_family", "unknown example family '" + family + "'");
}

Example build_example(const std::string& reference) {
    const auto colon = reference.find(':');
    const std::string family = reference.substr(0, colon);
    std::vector<std::int64_t> params;
    if (colon != std::string::npos) {
        std::string_view rest(reference);
        rest.remove_prefix(colon + 1);
        while (true) {
            const auto comma = rest.find(',');
            const std::string_view tok = rest.substr(0, comma);
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
                throw InvalidInput("bad_example_reference", "cannot parse parameter '" + std::string(tok) + "' in " + reference);
            }
            params.push_back(v);
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
    }
    return build_example(family, params);
}

LocalQuiver abelianized_quiver(const Quiver& q, const DimVector& d, const Stability& theta) {
    check_size(q, d);
    check_size(q, theta);
    check_nonzero(d);
    std::vector<std::string> names;
    std::vector<std::size_t> origin;
    std::vector<std::int64_t> weights;
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::int64_t k = 1; k <= d[i]; ++k) {
            names.push_back(q.vertices()[i] + "_" + std::to_string(k));
            origin.push_back(i);
            weights.push_back(theta[i]);
        }
    }
    const std::size_t n = names.size();
    Matrix arrows = square(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) arrows[a][b] = q.arrows(origin[a], origin[b]);
    }
    return {Quiver(std::move(names), std::move(arrows)), DimVector(std::vector<std::int64_t>(n, 1)),
            Stability(std::move(weights))};
}

PointConfigLocal point_config_local_data(std::int64_t m, std::int64_t d, const MarkedPartition& lambda) {
    if (m < 1 || d < 2) throw InvalidInput("bad_example_params", "points: need m >= 1 and d >= 2");
    const std::int64_t g = std::gcd(m, d), e = d / g, n = m / g;
    if (lambda.parts.empty() || lambda.marked >= lambda.parts.size()) {
        throw InvalidInput("bad_marked_partition", "marked partition needs a valid marked part");
    }
    std::int64_t sum = 0;
    for (std::int64_t x : lambda.parts) {
        if (x < 1) throw InvalidInput("bad_marked_partition", "partition parts must be positive");
        sum += x;
    }
    if (sum != g) throw InvalidInput("bad_marked_partition", "parts must sum to gcd(m, d) = " + std::to_string(g));

    const Example ex = points({m, d});
    // The marked block contains source 1, then the other blocks follow consecutively.
    std::vector<std::size_t> order{lambda.marked};
    for (std::size_t k = 0; k < lambda.parts.size(); ++k) {
        if (k != lambda.marked) order.push_back(k);
    }
    const auto sources = static_cast<std::size_t>(m);
    std::vector<std::pair<DimVector, std::size_t>> blocks;
    std::size_t next = 0;
    for (std::size_t k : order) {
        std::vector<std::int64_t> c(sources + 1, 0);
        const auto width = static_cast<std::size_t>(n * lambda.parts[k]);
        for (std::size_t s = 0; s < width; ++s) c[next + s] = 1;
        next += width;
        c[sources] = e * lambda.parts[k];
        blocks.emplace_back(DimVector(std::move(c)), k);
    }
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return b.first < a.first; });

    PointConfigLocal out;
    std::vector<std::int64_t> lam;
    std::vector<bool> marked;
    for (const auto& [part, k] : blocks) {
        out.type.parts.push_back({part, 1});
        lam.push_back(lambda.parts[k]);
        marked.push_back(k == lambda.marked);
    }
    out.local = local_quiver(ex.quiver, out.type, *ex.theta_prime);

    const std::size_t s = lam.size();
    out.closed_form_arrows = square(s);
    out.arrows_agree = true;
    for (std::size_t p = 0; p < s; ++p) {
        out.closed_form_stability.push_back(marked[p] ? d - e * lam[p] : -e * lam[p]);
        for (std::size_t q = 0; q < s; ++q) {
            if (p == q) continue;
            out.closed_form_arrows[p][q] = e * (e - n) * lam[p] * lam[q];
            if (out.closed_form_arrows[p][q] != out.local.quiver.arrows(p, q)) out.arrows_agree = false;
        }
    }
    out.stability_agree = out.closed_form_stability == out.local.theta.weights();
    return out;
}

RankOneReport rank_one_smallness_report(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1) throw InvalidInput("bad_example_params", "rank one report needs m, n >= 1");
    RankOneReport r;
    r.m = m;
    r.n = n;
    r.fiber_dim = m - 1;
    r.codim = m + n - 1;
    r.small = 2 * r.fiber_dim < r.codim;
    return r;
}

}  // namespace quivmod
