#ifndef QAQ_CORPUS_HPP
#define QAQ_CORPUS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qaq/diagram.hpp"

namespace qaq {

// Names of the bundled diagrams: 3_1, the prime links through 7 crossings
// (L2a1 .. L7n2), and alternative diagrams of some of them used by the
// invariance tests (suffixed _v2, _v3, ...).
const std::vector<std::string>& corpus_names();

// Loads a bundled diagram; throws Error(UnknownName).
Diagram load_corpus(std::string_view name);

}  // namespace qaq

#endif
