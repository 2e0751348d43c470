#include "knotsurgery/family.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "knotsurgery/knot.hpp"
#include "knotsurgery/surgery.hpp"

namespace knotsurgery {

namespace {

FamilyRow compute_row(std::int64_t n, std::int64_t p)
{
    const SurgerySpec spec(n, LinkFamilyMember(p));
    const TorusKnotSpec gamma = spec.member().gamma();
    LaurentPoly delta = alexander_torus(gamma);
    const std::size_t bound = sw_specialized(spec).basic_class_lower_bound;
    const std::int64_t g = genus_torus(gamma);
    const std::int64_t s = span(delta);
    if (s != 2 * g)
        throw InternalInconsistency("fibered-knot check failed: span != 2 * genus at p = " + std::to_string(p));
    return FamilyRow{p, std::move(delta), bound, bound >= static_cast<std::size_t>(p), g, s};
}

} // namespace

FamilyReport analyze_family(std::int64_t n, std::int64_t p_min, std::int64_t p_max, std::int64_t p_cap,
                            unsigned threads)
{
    if (n < 1)
        throw InvalidArgument("n must be >= 1");
    if (p_min < 1 || p_min > p_max || p_max > p_cap)
        throw InvalidArgument("family range must satisfy 1 <= p_min <= p_max <= " + std::to_string(p_cap));

    const auto count = static_cast<std::size_t>(p_max - p_min + 1);
    std::vector<std::optional<FamilyRow>> slots(count);
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                slots[i] = compute_row(n, p_min + static_cast<std::int64_t>(i));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t)
            pool.emplace_back(worker);
        worker();
    }
    if (failure)
        std::rethrow_exception(failure);

    FamilyReport report{n, {}};
    report.rows.reserve(count);
    for (auto& s : slots)
        report.rows.push_back(std::move(*s));
    return report;
}

UnboundednessCertificate certify_unbounded(std::int64_t target, std::int64_t p_cap)
{
    if (target < 0)
        throw InvalidArgument("certificate target must be >= 0");
    UnboundednessCertificate cert{target, {}};
    std::optional<std::size_t> best;
    for (std::int64_t p = 1; p <= p_cap; ++p) {
        const std::size_t bound = basic_class_lower_bound(p);
        if (best && bound <= *best)
            continue;
        best = bound;
        cert.witnesses.push_back({p, bound});
        if (static_cast<std::int64_t>(bound) > target)
            return cert;
    }
    throw CapExhausted("no lower bound above " + std::to_string(target) + " for p <= " + std::to_string(p_cap));
}

bool verify_certificate(const UnboundednessCertificate& c, std::int64_t n)
{
    if (n < 1 || c.witnesses.empty())
        return false;
    try {
        for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
            const auto& w = c.witnesses[i];
            if (w.p < 1)
                return false;
            if (i > 0) {
                const auto& prev = c.witnesses[i - 1];
                if (w.p <= prev.p || w.lower_bound <= prev.lower_bound)
                    return false;
            }
            const SWResult sw = sw_specialized(SurgerySpec(n, LinkFamilyMember(w.p)));
            if (sw.basic_class_lower_bound != w.lower_bound)
                return false;
        }
    } catch (const Error&) {
        return false;
    }
    return static_cast<std::int64_t>(c.witnesses.back().lower_bound) > c.target;
}

} // namespace knotsurgery
