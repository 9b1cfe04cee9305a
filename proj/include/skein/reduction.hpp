#pragma once

#include <string>
#include <vector>

#include "skein/handlebody.hpp"
#include "skein/relations.hpp"

namespace skein {

/// Rewrites a basis triple as an exact combination of the five
/// generators, descending through the case systems. Results are
/// memoized. Throws SingularSystemError if a case matrix degenerates
/// (which would falsify the relation transcription).
SkeinVector reduce(const BasisTriple& t);

/// Linear extension of reduce.
SkeinVector reduce_vector(const SkeinVector& v);

struct ConsistencyReport {
    bool ok = true;
    int checked = 0;
    std::vector<std::string> failures;
};

/// Checks that every relation vector reduces to zero, over all slides
/// with parameter entries up to max_param.
ConsistencyReport relation_consistency(int max_param);

/// Enumerates the relation instances covered by relation_consistency.
std::vector<RelationId> relation_grid(int max_param);

}  // namespace skein
