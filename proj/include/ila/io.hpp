#ifndef ILA_IO_HPP
#define ILA_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ila/automaton.hpp"
#include "ila/elman.hpp"
#include "ila/eval.hpp"
#include "ila/trace.hpp"

namespace ila {

using Json = nlohmann::ordered_json;

// Infinite bounds are written as the strings "inf" / "-inf"; every other
// number uses the shortest text that reads back to the same double.
Json number_to_json(double v);
double number_from_json(const Json& j);

Json partition_to_json(const Partition& p);
/// Accepts `cuts` either as one list per dimension or, for a single
/// dimension, as a flat list of numbers.
Partition partition_from_json(const Json& j);

Json automaton_to_json(const LatticeAutomaton& a);
LatticeAutomaton automaton_from_json(const Json& j);

Json weights_to_json(const ElmanWeights& w);
ElmanWeights weights_from_json(const Json& j);

/// Line-delimited traces, preceded by a header line when the set carries
/// header fields.
void write_traces(std::ostream& os, const TraceSet& set);
TraceSet read_traces(std::istream& is);

/// Line-delimited words, one {"word": [[...], ...]} record per line.
void write_words(std::ostream& os, const std::vector<Word>& words);
std::vector<Word> read_words(std::istream& is);

/// Report fields; `words` is needed only when the report carries
/// per-word disagreements.
Json report_to_json(const EvalReport& r, const LatticeAutomaton& a,
                    const std::vector<Word>* words = nullptr);

Json read_json_file(const std::filesystem::path& path);
/// Writes `dump(2)` plus a trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

inline Partition read_partition(const std::filesystem::path& p) {
  return partition_from_json(read_json_file(p));
}
inline LatticeAutomaton read_automaton(const std::filesystem::path& p) {
  return automaton_from_json(read_json_file(p));
}
inline void write_automaton(const std::filesystem::path& p, const LatticeAutomaton& a) {
  write_json_file(p, automaton_to_json(a));
}
inline ElmanWeights read_weights(const std::filesystem::path& p) {
  return weights_from_json(read_json_file(p));
}
TraceSet read_traces(const std::filesystem::path& path);
void write_traces(const std::filesystem::path& path, const TraceSet& set);
std::vector<Word> read_words(const std::filesystem::path& path);

/// Graphviz rendering: double circles for final states, an entry arrow per
/// initial state, one edge per transition labelled with its box. Bounds use
/// 6 significant digits; an upper bound sitting just below a cut point is
/// printed as that cut with an open bracket.
std::string to_dot(const LatticeAutomaton& a);

} // namespace ila

#endif
