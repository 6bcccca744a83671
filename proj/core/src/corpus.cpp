#include "qaq/corpus.hpp"

#include <algorithm>

namespace qaq {

namespace detail {
struct CorpusEntry {
  const char* name;
  const char* text;
};
// Defined in the generated corpus_data.cpp.
extern const CorpusEntry* corpus_entries();
extern int corpus_entry_count();
}  // namespace detail

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    const auto* entries = detail::corpus_entries();
    for (int i = 0; i < detail::corpus_entry_count(); ++i) v.push_back(entries[i].name);
    return v;
  }();
  return names;
}

Diagram load_corpus(std::string_view name) {
  const auto* entries = detail::corpus_entries();
  for (int i = 0; i < detail::corpus_entry_count(); ++i) {
    if (name == entries[i].name) {
      Diagram d = parse_native(entries[i].text);
      d.set_name(std::string(name));
      return d;
    }
  }
  throw Error(ErrorKind::UnknownName, "no bundled diagram named '" + std::string(name) + "'");
}

}  // namespace qaq
