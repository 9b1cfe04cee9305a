#include "skein/reduction.hpp"

#include "skein/errors.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace skein {

namespace {

RatMatrix transpose(const RatMatrix& m) {
    const std::size_t n = m.size();
    RatMatrix out(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[j][i] = m[i][j];
    return out;
}

std::map<BasisTriple, SkeinVector, OrderLess>& reduce_cache() {
    static std::map<BasisTriple, SkeinVector, OrderLess> cache;
    return cache;
}

std::mutex& reduce_mutex() {
    static std::mutex mutex;
    return mutex;
}

SkeinVector reduce_locked(const BasisTriple& t);

// Expresses the target of the case system in strictly lesser terms:
// row (n-1) of the inverse matrix applied to the negated lesser parts.
SkeinVector eliminate_target(const CaseSystem& sys) {
    const std::size_t n = sys.matrix.size();
    RatVector unit(n);
    unit[n - 1] = RationalFn::one();
    auto [cols, det] = solve_columns(transpose(sys.matrix), {unit});
    (void)det;
    const RatVector& weights = cols.front();
    SkeinVector out;
    for (std::size_t i = 0; i < n; ++i) {
        if (weights[i].is_zero()) continue;
        out = out + sys.lesser[i].scaled(-weights[i]);
    }
    return out;
}

SkeinVector reduce_locked(const BasisTriple& t) {
    if (!t.valid()) throw std::invalid_argument("reduce: invalid triple " + t.to_string());
    auto& cache = reduce_cache();
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;

    SkeinVector result;
    const int c = case_of(t);
    if (c == 0) {
        result = SkeinVector(t);
    } else {
        CaseSystem sys = case_system(c, t);
        SkeinVector lesser;
        try {
            lesser = eliminate_target(sys);
        } catch (const SingularSystemError&) {
            std::ostringstream os;
            os << "reduce: singular case-" << c << " matrix at " << t.to_string();
            throw SingularSystemError(os.str());
        }
        // Descend, largest terms first.
        for (auto jt = lesser.support().rbegin(); jt != lesser.support().rend(); ++jt)
            result = result + reduce_locked(jt->first).scaled(jt->second);
    }
    cache.emplace(t, result);
    return result;
}

}  // namespace

SkeinVector reduce(const BasisTriple& t) {
    std::lock_guard<std::mutex> lock(reduce_mutex());
    return reduce_locked(t);
}

SkeinVector reduce_vector(const SkeinVector& v) {
    std::lock_guard<std::mutex> lock(reduce_mutex());
    SkeinVector out;
    for (auto it = v.support().rbegin(); it != v.support().rend(); ++it)
        out = out + reduce_locked(it->first).scaled(it->second);
    return out;
}

std::vector<RelationId> relation_grid(int max_param) {
    std::vector<RelationId> grid;
    // Slide 1 needs (alpha, alpha, beta) admissible; slide 2 is its
    // mirror and needs (gamma, gamma, beta) admissible.
    for (int alpha = 0; alpha <= max_param; ++alpha)
        for (int beta = 0; beta <= std::min(2 * alpha, max_param); beta += 2)
            for (int gamma = 0; gamma <= max_param; ++gamma)
                grid.push_back(RelationId{1, alpha, beta, gamma});
    for (int gamma = 0; gamma <= max_param; ++gamma)
        for (int beta = 0; beta <= std::min(2 * gamma, max_param); beta += 2)
            for (int alpha = 0; alpha <= max_param; ++alpha)
                grid.push_back(RelationId{2, alpha, beta, gamma});
    for (int alpha = 0; alpha <= max_param; ++alpha)
        for (int gamma = 0; gamma <= max_param; ++gamma)
            grid.push_back(RelationId{3, alpha, 0, gamma});
    for (int alpha = 0; alpha <= max_param; ++alpha) grid.push_back(RelationId{4, alpha, 0, 0});
    for (int gamma = 0; gamma <= max_param; ++gamma) grid.push_back(RelationId{5, 0, 0, gamma});
    for (int alpha = 0; alpha <= max_param; ++alpha) grid.push_back(RelationId{6, alpha, 0, 0});
    return grid;
}

ConsistencyReport relation_consistency(int max_param) {
    ConsistencyReport report;
    for (const RelationId& id : relation_grid(max_param)) {
        const SkeinVector residue = reduce_vector(relation_vector(id));
        ++report.checked;
        if (!residue.is_zero()) {
            report.ok = false;
            report.failures.push_back(id.to_string() + " has nonzero residue " + residue.to_json());
        }
    }
    return report;
}

}  // namespace skein
