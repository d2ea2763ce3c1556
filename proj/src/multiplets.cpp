#include "primepat/multiplets.hpp"

#include <algorithm>
#include <sstream>

#include "primepat/error.hpp"
#include "primepat/parallel.hpp"

namespace primepat {

namespace {

constexpr Int kIntMax = static_cast<Int>(kNatMax);

Int checked_add(Int a, Nat b) {
    if (b > static_cast<Nat>(kIntMax) || a > kIntMax - static_cast<Int>(b))
        throw Error(ErrorKind::Overflow, "multiplet member exceeds 2^63");
    return a + static_cast<Int>(b);
}

// Candidate block size for ordered, limit-aware scans.
constexpr std::uint64_t kBlock = std::uint64_t{1} << 16;

// Runs test(i) over candidate indices [0, count) in ordered blocks; returns
// the hits ascending. Stops after the block in which `limit` is reached.
template <class Test>
std::vector<std::uint64_t> ordered_scan(std::uint64_t count, const SearchOptions& options, Test&& test) {
    const unsigned w = resolve_workers(options.workers);
    std::vector<std::uint64_t> hits;
    for (std::uint64_t block = 0; block < count; block += kBlock * w) {
        const std::uint64_t block_end = std::min(count, block + kBlock * w);
        std::vector<std::vector<std::uint64_t>> partial(w);
        parallel_chunks(block_end - block, w, [&](unsigned worker, std::uint64_t b, std::uint64_t e) {
            for (std::uint64_t i = block + b; i < block + e; ++i)
                if (test(i)) partial[worker].push_back(i);
        });
        for (const auto& part : partial) hits.insert(hits.end(), part.begin(), part.end());
        if (options.limit > 0 && hits.size() >= options.limit) {
            hits.resize(options.limit);
            break;
        }
    }
    return hits;
}

}  // namespace

void validate_pattern(const DistancePattern& pattern) {
    for (Nat g : pattern) {
        if (g == 0 || g % 2 != 0)
            throw Error(ErrorKind::InvalidArgument, "distance pattern gaps must be positive and even");
    }
}

DistancePattern repeated(Nat gap, std::size_t count) { return DistancePattern(count, gap); }

Multiplet make_multiplet(Int start, DistancePattern pattern, bool admit_powers) {
    validate_pattern(pattern);
    Multiplet m{start, std::move(pattern), admit_powers};
    (void)members(m);  // range check
    return m;
}

std::vector<Int> members(const Multiplet& m) {
    std::vector<Int> out;
    out.reserve(m.length());
    out.push_back(m.start);
    for (Nat g : m.pattern) out.push_back(checked_add(out.back(), g));
    return out;
}

Multiplet from_members(const std::vector<Int>& values, bool admit_powers) {
    if (values.empty()) throw Error(ErrorKind::InvalidArgument, "multiplet needs at least one member");
    DistancePattern pattern;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] <= values[i - 1])
            throw Error(ErrorKind::InvalidArgument, "members must be strictly increasing");
        pattern.push_back(static_cast<Nat>(values[i] - values[i - 1]));
    }
    return make_multiplet(values.front(), std::move(pattern), admit_powers);
}

bool is_prime_multiplet(const Multiplet& m) {
    for (Int v : members(m))
        if (!admits(v, m.admit_powers)) return false;
    return true;
}

std::string describe(const Multiplet& m) {
    std::ostringstream os;
    os << '(';
    const auto vs = members(m);
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? ", " : "") << vs[i];
    os << ") [";
    for (std::size_t i = 0; i < m.pattern.size(); ++i) os << (i ? "," : "") << m.pattern[i];
    os << ']';
    return os.str();
}

Nat equal_distance_step(Nat p, Nat length) { return length == p ? primorial_below(p) : 2; }

std::vector<Nat> search_equal_distance(Nat p, Nat length, Nat d_max, bool admit_powers,
                                       const SearchOptions& options) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "search_equal_distance: start must be prime");
    if (length < 3) throw Error(ErrorKind::InvalidArgument, "search_equal_distance: length must be >= 3");
    if (d_max > 0 && (d_max > (kNatMax - p) / (length - 1)))
        throw Error(ErrorKind::Overflow, "search_equal_distance: p + (length-1)*d_max exceeds 2^63");

    // Exceptional tuples: every prime below p must divide the distance, so
    // the step is forced to the primorial (and is even since p > 2).
    const Nat step = equal_distance_step(p, length);
    const std::uint64_t count = d_max / step;

    auto test = [&](std::uint64_t i) {
        const Nat d = (i + 1) * step;
        for (Nat k = 1; k < length; ++k)
            if (!(admit_powers ? is_prime_like(p + k * d) : is_prime(p + k * d))) return false;
        return true;
    };
    std::vector<Nat> out;
    for (std::uint64_t i : ordered_scan(count, options, test)) out.push_back((i + 1) * step);
    return out;
}

TupleReport verify_tuple(Nat start, Nat distance, Nat length) {
    if (length == 0) throw Error(ErrorKind::InvalidArgument, "verify_tuple: length must be >= 1");
    if (distance > 0 && length > 1 && distance > (kNatMax - start) / (length - 1))
        throw Error(ErrorKind::Overflow, "verify_tuple: last member exceeds 2^63");
    TupleReport report{start, distance, {}, true};
    for (Nat k = 0; k < length; ++k) {
        const Nat v = start + k * distance;
        const bool prime = is_prime(v);
        report.members.push_back({v, prime});
        report.all_prime = report.all_prime && prime;
    }
    return report;
}

BiTupleResult extend_bi_tuple(Nat p, Nat distance) {
    if (p <= 3 || !is_prime(p))
        throw Error(ErrorKind::InvalidArgument, "extend_bi_tuple: p must be a prime > 3");
    if (distance == 0 || distance % 2 != 0)
        throw Error(ErrorKind::InvalidArgument, "extend_bi_tuple: distance must be positive and even");
    const Nat half = distance / 2;
    if (half % 3 != 0) throw Error(ErrorKind::ConstraintViolation, "extend_bi_tuple: 3 must divide D");
    if (half % p == 0) throw Error(ErrorKind::ConstraintViolation, "extend_bi_tuple: p must not divide D");
    if (distance > (kNatMax - p) / (p - 1))
        throw Error(ErrorKind::Overflow, "extend_bi_tuple: progression exceeds 2^63");

    const Int centre = static_cast<Int>(p);
    const Int step = static_cast<Int>(distance);
    const Int reach = static_cast<Int>(p - 1);
    std::vector<Int> values;
    std::vector<bool> prime;
    for (Int k = -reach; k <= reach; ++k) {
        values.push_back(centre + k * step);
        prime.push_back(is_prime_signed(values.back()));
    }
    const std::size_t mid = static_cast<std::size_t>(reach);

    BiTupleResult result{p, distance, std::nullopt, Multiplet{}, 0, {}};
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!prime[i]) result.failures.push_back(values[i]);

    std::size_t lo = mid, hi = mid;
    while (lo > 0 && prime[lo - 1]) --lo;
    while (hi + 1 < values.size() && prime[hi + 1]) ++hi;
    result.longest = from_members({values.begin() + lo, values.begin() + hi + 1});

    while (result.symmetric_radius < mid && prime[mid - result.symmetric_radius - 1] &&
           prime[mid + result.symmetric_radius + 1])
        ++result.symmetric_radius;

    if (result.failures.empty()) result.full = from_members(values);
    return result;
}

std::string_view to_string(QuintetForm form) {
    switch (form) {
        case QuintetForm::EqualDistance: return "equal-distance";
        case QuintetForm::LeftD2: return "form-A";
        case QuintetForm::LeftD1: return "form-B";
        case QuintetForm::MirrorD1: return "mirror-d1";
        case QuintetForm::MirrorD2: return "mirror-d2";
    }
    return "?";
}

std::vector<QuintetHit> find_quintets_at_3(Nat d1, Nat d2) {
    if (d1 == 0 || d2 == 0) throw Error(ErrorKind::ConstraintViolation, "find_quintets_at_3: d1, d2 must be >= 1");
    if (d1 > (Nat{1} << 40) || d2 > (Nat{1} << 40))
        throw Error(ErrorKind::Overflow, "find_quintets_at_3: half-gaps too large");
    const Int a = static_cast<Int>(2 * d1);
    const Int b = static_cast<Int>(2 * d2);

    std::vector<std::pair<QuintetForm, std::vector<Int>>> candidates;
    if (d1 == d2) {
        if (d1 % 3 == 0) throw Error(ErrorKind::ConstraintViolation, "find_quintets_at_3: requires (3, D) = 1");
        candidates.push_back({QuintetForm::EqualDistance, {3 - 2 * a, 3 - a, 3, 3 + a, 3 + 2 * a}});
    } else {
        const Int diff = static_cast<Int>(d2) - static_cast<Int>(d1);
        if (diff % 3 != 0 || d1 % 3 == 0)
            throw Error(ErrorKind::ConstraintViolation, "find_quintets_at_3: requires 3 | d2-d1 and 3 not dividing d1");
        candidates.push_back({QuintetForm::LeftD2, {3 - a - b, 3 - b, 3, 3 + a, 3 + a + b}});
        candidates.push_back({QuintetForm::LeftD1, {3 - a - b, 3 - a, 3, 3 + b, 3 + a + b}});
        candidates.push_back({QuintetForm::MirrorD1, {3 - a - b, 3 - a, 3, 3 + a, 3 + a + b}});
        candidates.push_back({QuintetForm::MirrorD2, {3 - a - b, 3 - b, 3, 3 + b, 3 + a + b}});
    }

    std::vector<QuintetHit> hits;
    for (const auto& [form, values] : candidates) {
        if (!std::all_of(values.begin(), values.end(), is_prime_signed)) continue;
        auto quintet = from_members(values);
        const bool seen = std::any_of(hits.begin(), hits.end(),
                                      [&](const QuintetHit& h) { return h.quintet == quintet; });
        if (!seen) hits.push_back({std::move(quintet), form});
    }
    return hits;
}

std::vector<Int> search_pattern(const DistancePattern& pattern, Int lo, Int hi, bool admit_powers,
                                const SearchOptions& options) {
    validate_pattern(pattern);
    if (lo >= hi) throw Error(ErrorKind::InvalidArgument, "search_pattern: requires lo < hi");
    Nat span = 0;
    for (Nat g : pattern) span += g;
    (void)checked_add(hi, span);

    const std::uint64_t count = static_cast<std::uint64_t>(hi - lo) + 1;
    auto test = [&](std::uint64_t i) {
        Int v = lo + static_cast<Int>(i);
        if (!admits(v, admit_powers)) return false;
        for (Nat g : pattern) {
            v += static_cast<Int>(g);
            if (!admits(v, admit_powers)) return false;
        }
        return true;
    };
    std::vector<Int> out;
    for (std::uint64_t i : ordered_scan(count, options, test)) out.push_back(lo + static_cast<Int>(i));
    return out;
}

Multiplet contract(const Multiplet& m, std::size_t member_index) {
    if (member_index == 0 || member_index + 1 >= m.length())
        throw Error(ErrorKind::EndpointIndex, "contract: index must be intermediate (use omit_end)");
    Multiplet out = m;
    out.pattern[member_index - 1] += out.pattern[member_index];
    out.pattern.erase(out.pattern.begin() + static_cast<std::ptrdiff_t>(member_index));
    return out;
}

Multiplet insert(const Multiplet& m, Int value) {
    if (!admits(value, m.admit_powers))
        throw Error(ErrorKind::NotPrimeLike, "insert: " + std::to_string(value) + " is not prime-like");
    auto values = members(m);
    const auto pos = std::lower_bound(values.begin(), values.end(), value);
    if (pos != values.end() && *pos == value)
        throw Error(ErrorKind::DuplicateMember, "insert: " + std::to_string(value) + " already a member");
    values.insert(pos, value);
    return from_members(values, m.admit_powers);
}

Multiplet omit_end(const Multiplet& m, End which) {
    if (m.length() < 2) throw Error(ErrorKind::SingletonMultiplet, "omit_end: singleton multiplet");
    Multiplet out = m;
    if (which == End::First) {
        out.start = checked_add(m.start, m.pattern.front());
        out.pattern.erase(out.pattern.begin());
    } else {
        out.pattern.pop_back();
    }
    return out;
}

Multiplet reverse_multiplet(const Multiplet& m) {
    const auto values = members(m);
    Multiplet out;
    out.start = -values.back();
    out.pattern.assign(m.pattern.rbegin(), m.pattern.rend());
    out.admit_powers = m.admit_powers;
    return out;
}

}  // namespace primepat
