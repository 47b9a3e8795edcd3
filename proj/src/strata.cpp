#include "quivmod/strata.hpp"

#include <functional>

#include "quivmod/deform.hpp"

namespace quivmod {

std::string HalfInt::to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

DimVector LunaType::total() const {
    DimVector sum = DimVector::zero(parts.empty() ? 0 : parts.front().part.size());
    for (const auto& p : parts) sum = sum + p.part.scaled(p.multiplicity);
    return sum;
}

std::int64_t LunaType::multiplicity_sum() const {
    std::int64_t s = 0;
    for (const auto& p : parts) s += p.multiplicity;
    return s;
}

std::string LunaType::to_string() const {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += '+';
        if (p.multiplicity != 1) out += std::to_string(p.multiplicity) + '*';
        out += p.part.to_string();
    }
    return out;
}

std::vector<LunaType> luna_types(const Quiver& q, const DimVector& d, const Stability& theta, const Limits& limits) {
    check_size(q, d);
    check_size(q, theta);
    check_nonzero(d);
    const Stability normalized = normalize_stability(theta, d);
    const LatticeBox box(d.coords(), limits);
    const auto values = box.evaluate(normalized.weights());

    // Candidate parts in descending lexicographic order.
    std::vector<DimVector> candidates;
    for (std::size_t c = box.cell_count(); c-- > 1;) {
        if (values[c] == 0) candidates.emplace_back(box.point(c));
    }

    std::vector<LunaType> out;
    LunaType current;
    std::function<void(std::size_t, const DimVector&)> recurse = [&](std::size_t start, const DimVector& remaining) {
        if (remaining.is_zero()) {
            if (out.size() >= limits.max_box_cells) throw BoxGuardExceeded(out.size() + 1, limits.max_box_cells);
            out.push_back(current);
            return;
        }
        for (std::size_t i = start; i < candidates.size(); ++i) {
            const DimVector& part = candidates[i];
            DimVector rest = remaining;
            for (std::int64_t m = 1; part.leq(rest); ++m) {
                rest = rest - part;
                current.parts.push_back({part, m});
                recurse(i + 1, rest);
                current.parts.pop_back();
            }
        }
    };
    recurse(0, d);
    return out;
}

namespace {

void check_type(const Quiver& q, const LunaType& xi) {
    if (xi.parts.empty()) throw InvalidInput("empty_luna_type", "decomposition type has no parts");
    for (const auto& p : xi.parts) {
        check_size(q, p.part);
        if (p.part.is_zero() || p.multiplicity < 1) {
            throw InvalidInput("bad_luna_part", "decomposition type parts must be nonzero with positive multiplicity");
        }
    }
}

std::vector<std::vector<std::int64_t>> local_arrows(const Quiver& q, const LunaType& xi) {
    const std::size_t s = xi.parts.size();
    std::vector<std::vector<std::int64_t>> arrows(s, std::vector<std::int64_t>(s));
    for (std::size_t k = 0; k < s; ++k) {
        for (std::size_t l = 0; l < s; ++l) {
            const std::int64_t n = (k == l ? 1 : 0) - euler_form(q, xi.parts[k].part, xi.parts[l].part);
            if (n < 0) throw NegativeArrowCount(k, l, n);
            arrows[k][l] = n;
        }
    }
    return arrows;
}

}  // namespace

LocalQuiver local_quiver(const Quiver& q, const LunaType& xi, const Stability& theta_prime) {
    check_type(q, xi);
    check_size(q, theta_prime);
    std::vector<std::string> names;
    std::vector<std::int64_t> mult;
    std::vector<std::int64_t> weights;
    for (const auto& p : xi.parts) {
        names.push_back(p.part.to_string());
        mult.push_back(p.multiplicity);
        weights.push_back(theta_prime(p.part));
    }
    return {Quiver(std::move(names), local_arrows(q, xi)), DimVector(std::move(mult)), Stability(std::move(weights))};
}

HalfInt nullcone_dim_bound(const Quiver& q, const DimVector& d) {
    check_size(q, d);
    if (!q.is_symmetric()) throw PreconditionError("quiver_not_symmetric", "nullcone bound needs a symmetric quiver");
    std::int64_t diag = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const DimVector unit = DimVector::unit(d.size(), i);
        diag += euler_form(q, unit, unit) * d[i];
    }
    return HalfInt::half(diag - euler_form(q, d, d)) - HalfInt(d.total());
}

HalfInt fiber_dim_bound(const Quiver& q, const LunaType& xi) {
    check_type(q, xi);
    const std::size_t s = xi.parts.size();
    for (std::size_t k = 0; k < s; ++k) {
        for (std::size_t l = k + 1; l < s; ++l) {
            if (euler_form(q, xi.parts[k].part, xi.parts[l].part) != euler_form(q, xi.parts[l].part, xi.parts[k].part)) {
                throw PreconditionError("local_quiver_not_symmetric", "local quiver of " + xi.to_string() + " is not symmetric");
            }
        }
    }
    const DimVector d = xi.total();
    std::int64_t diag = 0;
    for (const auto& p : xi.parts) diag += euler_form(q, p.part, p.part) * p.multiplicity;
    const HalfInt direct = HalfInt::half(diag - euler_form(q, d, d)) - HalfInt(xi.multiplicity_sum()) + HalfInt(1);

    const LocalQuiver local = local_quiver(q, xi, Stability::zero(q.vertex_count()));
    const HalfInt via_local = nullcone_dim_bound(local.quiver, local.d) + HalfInt(1);
    if (direct != via_local) {
        throw ConsistencyError("fiber_bound_mismatch", "fiber bound " + direct.to_string() + " differs from local nullcone bound " +
                                                           via_local.to_string() + " for " + xi.to_string());
    }
    return direct;
}

std::int64_t codim_lower_bound(const Quiver& q, const DimVector& d, const LunaType& xi) {
    check_size(q, d);
    check_type(q, xi);
    std::int64_t c = 1 - euler_form(q, d, d);
    for (const auto& p : xi.parts) c -= 1 - euler_form(q, p.part, p.part);
    return c;
}

HalfInt smallness_margin(const Quiver& q, const DimVector& d, const LunaType& xi) {
    check_size(q, d);
    check_type(q, xi);
    if (!(xi.total() == d)) throw InvalidInput("type_total_mismatch", "type " + xi.to_string() + " does not sum to " + d.to_string());
    std::int64_t twice = -(xi.multiplicity_sum() - 1);
    for (const auto& p : xi.parts) twice -= (1 - euler_form(q, p.part, p.part)) * (p.multiplicity - 1);
    const HalfInt margin = HalfInt::from_twice(twice);
    const HalfInt identity = fiber_dim_bound(q, xi) - HalfInt::half(codim_lower_bound(q, d, xi));
    if (margin != identity) {
        throw ConsistencyError("margin_identity_failed", "margin " + margin.to_string() + " differs from fiber - codim/2 = " +
                                                             identity.to_string() + " for " + xi.to_string());
    }
    return margin;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::certified: return "Certified";
        case Verdict::not_certified: return "NotCertified";
        case Verdict::not_applicable: return "NotApplicable";
    }
    return "";
}

SmallnessReport certify_smallness(const Quiver& q, const DimVector& d, const Stability& theta,
                                  const Stability& theta_prime, bool assume_stable_nonempty, const Limits& limits) {
    check_size(q, d);
    check_size(q, theta);
    check_size(q, theta_prime);
    check_nonzero(d);
    SmallnessReport report;
    report.assume_stable_nonempty = assume_stable_nonempty;

    const Stability normalized = normalize_stability(theta, d);
    const Stability deformed = normalize_stability(theta_prime, d);
    const bool generic = is_generic_deformation(normalized, deformed, d, limits).passes;
    const bool symmetric = symmetric_on_kernel(q, normalized);
    report.hypotheses = {{"generic_deformation", generic}, {"kernel_symmetric", symmetric}};
    if (!generic) report.reasons.push_back("deformed stability is not a generic deformation");
    if (!symmetric) report.reasons.push_back("Euler form is not symmetric on the kernel of the stability");
    if (!report.reasons.empty()) return report;

    bool ok = true;
    for (auto& xi : luna_types(q, d, normalized, limits)) {
        StratumRecord rec;
        rec.type = std::move(xi);
        for (const auto& p : rec.type.parts) {
            const std::int64_t self = euler_form(q, p.part, p.part);
            if (self > 1) {
                rec.filtered = true;
                rec.filter_reason = "part " + p.part.to_string() + " has <e,e> = " + std::to_string(self) + " > 1";
                break;
            }
        }
        if (!rec.filtered) {
            try {
                rec.local = local_quiver(q, rec.type, deformed);
            } catch (const NegativeArrowCount& e) {
                rec.filtered = true;
                rec.filter_reason = e.what();
            }
        }
        if (!rec.filtered) {
            if (!is_coprime(rec.local->theta, rec.local->d, limits)) {
                throw ConsistencyError("local_not_coprime", "local dimension vector of " + rec.type.to_string() + " is not coprime");
            }
            rec.fiber_bound = fiber_dim_bound(q, rec.type);
            rec.codim_bound = codim_lower_bound(q, d, rec.type);
            rec.margin = smallness_margin(q, d, rec.type);
            if (rec.type.is_trivial() ? rec.margin != HalfInt(0) : rec.margin >= HalfInt(0)) {
                ok = false;
                report.reasons.push_back("type " + rec.type.to_string() + " has margin " + rec.margin.to_string());
            }
        }
        report.strata.push_back(std::move(rec));
    }
    report.verdict = ok ? Verdict::certified : Verdict::not_certified;
    return report;
}

}  // namespace quivmod
