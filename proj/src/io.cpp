#include "ila/io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include "ila/error.hpp"

namespace ila {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw FormatError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::vector<double> vector_from_json(const Json& j, const char* what) {
  if (!j.is_array())
    throw FormatError(std::string(what) + " must be a list of numbers");
  std::vector<double> v;
  v.reserve(j.size());
  for (const auto& e : j)
    v.push_back(number_from_json(e));
  return v;
}

Json vector_to_json(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v)
    a.push_back(number_to_json(x));
  return a;
}

std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw FormatError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

bool bit_from_json(const Json& j, const char* what) {
  if (j.is_boolean())
    return j.get<bool>();
  if (j.is_number_integer() && (j.get<long long>() == 0 || j.get<long long>() == 1))
    return j.get<long long>() == 1;
  throw FormatError(std::string(what) + " must be 0 or 1");
}

Json box_to_json(const Box& b) {
  Json lo = Json::array();
  Json hi = Json::array();
  for (const auto& i : b.intervals()) {
    lo.push_back(number_to_json(i.lo()));
    hi.push_back(number_to_json(i.hi()));
  }
  return Json{{"lo", std::move(lo)}, {"hi", std::move(hi)}};
}

Box box_from_json(const Json& j) {
  const auto lo = vector_from_json(field(j, "lo"), "lo");
  const auto hi = vector_from_json(field(j, "hi"), "hi");
  if (lo.size() != hi.size() || lo.empty())
    throw FormatError("box needs matching non-empty lo/hi lists");
  std::vector<Interval> dims;
  for (std::size_t i = 0; i < lo.size(); ++i)
    dims.emplace_back(lo[i], hi[i]);
  return Box(std::move(dims));
}

Json word_to_json(const Word& w) {
  Json a = Json::array();
  for (const auto& letter : w)
    a.push_back(vector_to_json(letter));
  return a;
}

Word word_from_json(const Json& j) {
  if (!j.is_array())
    throw FormatError("word must be a list of letters");
  Word w;
  for (const auto& letter : j)
    w.push_back(letter.is_array() ? vector_from_json(letter, "letter")
                                  : std::vector<double>{number_from_json(letter)});
  return w;
}

Json parse_line(const std::string& line, std::size_t lineno) {
  try {
    return Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
  }
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw FormatError("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw FormatError("cannot write " + path.string());
  return out;
}

} // namespace

Json number_to_json(double v) {
  if (std::isnan(v))
    throw InvalidValue("cannot serialize NaN");
  if (std::isinf(v))
    return v > 0 ? Json("inf") : Json("-inf");
  return Json(v);
}

double number_from_json(const Json& j) {
  if (j.is_number())
    return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf")
      return std::numeric_limits<double>::infinity();
    if (s == "-inf")
      return -std::numeric_limits<double>::infinity();
  }
  throw FormatError("expected a number, got " + j.dump());
}

Json partition_to_json(const Partition& p) {
  Json cuts = Json::array();
  for (const auto& c : p.cuts())
    cuts.push_back(vector_to_json(c));
  return Json{{"cuts", std::move(cuts)}};
}

Partition partition_from_json(const Json& j) {
  const Json& cuts = field(j, "cuts");
  if (!cuts.is_array())
    throw FormatError("cuts must be a list");
  std::vector<std::vector<double>> per_dim;
  const bool flat = cuts.empty() || !cuts.front().is_array();
  if (flat) {
    per_dim.push_back(vector_from_json(cuts, "cuts"));
  } else {
    for (const auto& c : cuts)
      per_dim.push_back(vector_from_json(c, "cuts"));
  }
  return Partition(std::move(per_dim));
}

Json automaton_to_json(const LatticeAutomaton& a) {
  Json j;
  j["dim"] = a.dim();
  j["partition"] = partition_to_json(a.partition());
  j["states"] = a.states();
  j["initial"] = std::vector<StateId>(a.initial().begin(), a.initial().end());
  j["final"] = std::vector<StateId>(a.final_states().begin(), a.final_states().end());
  Json ts = Json::array();
  for (const auto& t : a.transitions()) {
    Json e;
    e["source"] = t.source;
    e["class"] = t.cls;
    Json b = box_to_json(t.label);
    e["lo"] = std::move(b["lo"]);
    e["hi"] = std::move(b["hi"]);
    e["target"] = t.target;
    ts.push_back(std::move(e));
  }
  j["transitions"] = std::move(ts);
  Json gamma = Json::array();
  for (StateId q : a.states()) {
    Json g;
    g["state"] = q;
    if (a.gamma(q).is_bottom()) {
      g["bottom"] = true;
    } else {
      Json b = box_to_json(a.gamma(q));
      g["lo"] = std::move(b["lo"]);
      g["hi"] = std::move(b["hi"]);
    }
    gamma.push_back(std::move(g));
  }
  j["gamma"] = std::move(gamma);
  return j;
}

LatticeAutomaton automaton_from_json(const Json& j) {
  try {
    const std::size_t dim = size_from_json(field(j, "dim"), "dim");
    LatticeAutomaton a(dim, partition_from_json(field(j, "partition")));
    std::map<StateId, Box> gamma;
    if (j.contains("gamma")) {
      for (const auto& g : j.at("gamma")) {
        const auto q = static_cast<StateId>(size_from_json(field(g, "state"), "state"));
        const bool bottom = g.contains("bottom") && g.at("bottom").get<bool>();
        gamma[q] = bottom ? Box::bottom() : box_from_json(g);
      }
    }
    for (const auto& s : field(j, "states")) {
      const auto q = static_cast<StateId>(size_from_json(s, "state"));
      a.add_state(q, gamma.contains(q) ? gamma.at(q) : Box::bottom());
      gamma.erase(q);
    }
    if (!gamma.empty())
      throw FormatError("gamma given for unknown state " + std::to_string(gamma.begin()->first));
    for (const auto& q : field(j, "initial"))
      a.set_initial(static_cast<StateId>(size_from_json(q, "initial")));
    for (const auto& q : field(j, "final"))
      a.set_final(static_cast<StateId>(size_from_json(q, "final")));
    std::set<std::tuple<StateId, std::size_t, StateId>> seen;
    for (const auto& t : field(j, "transitions")) {
      const auto src = static_cast<StateId>(size_from_json(field(t, "source"), "source"));
      const auto dst = static_cast<StateId>(size_from_json(field(t, "target"), "target"));
      const std::size_t cls = size_from_json(field(t, "class"), "class");
      const Box label = box_from_json(t);
      if (a.partition().class_of(label) != cls)
        throw FormatError("transition " + std::to_string(src) + " -> " + std::to_string(dst) +
                          " is labelled outside its class " + std::to_string(cls));
      if (!seen.emplace(src, cls, dst).second)
        throw FormatError("duplicate transition " + std::to_string(src) + " -> " +
                          std::to_string(dst) + " in class " + std::to_string(cls));
      a.add_transition(src, label, dst);
    }
    return a;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed automaton: ") + e.what());
  }
}

Json weights_to_json(const ElmanWeights& w) {
  Json j;
  j["d"] = w.input_dim;
  j["m"] = w.hidden_dim;
  j["Wx"] = vector_to_json(w.wx);
  j["Wh"] = vector_to_json(w.wh);
  j["b"] = vector_to_json(w.b);
  j["wo"] = vector_to_json(w.wo);
  j["c"] = number_to_json(w.c);
  return j;
}

ElmanWeights weights_from_json(const Json& j) {
  const auto matrix = [&](const char* name) {
    const Json& m = field(j, name);
    if (m.is_array() && !m.empty() && m.front().is_array()) {
      std::vector<double> flat;
      for (const auto& row : m)
        for (double v : vector_from_json(row, name))
          flat.push_back(v);
      return flat;
    }
    return vector_from_json(m, name);
  };
  ElmanWeights w;
  w.input_dim = size_from_json(field(j, "d"), "d");
  w.hidden_dim = size_from_json(field(j, "m"), "m");
  w.wx = matrix("Wx");
  w.wh = matrix("Wh");
  w.b = vector_from_json(field(j, "b"), "b");
  w.wo = vector_from_json(field(j, "wo"), "wo");
  w.c = number_from_json(field(j, "c"));
  w.validate();
  return w;
}

void write_traces(std::ostream& os, const TraceSet& set) {
  if (set.dim || set.hidden_dim || set.y0_default) {
    Json header = Json::object();
    if (set.dim)
      header["dim"] = *set.dim;
    if (set.hidden_dim)
      header["hidden_dim"] = *set.hidden_dim;
    if (set.y0_default)
      header["y0_default"] = *set.y0_default ? 1 : 0;
    os << header.dump() << '\n';
  }
  for (const auto& t : set.traces) {
    Json steps = Json::array();
    for (const auto& s : t.steps) {
      Json step;
      step["x"] = vector_to_json(s.x);
      step["h"] = vector_to_json(s.h);
      step["y"] = s.y ? 1 : 0;
      steps.push_back(std::move(step));
    }
    Json rec;
    rec["steps"] = std::move(steps);
    if (t.h0)
      rec["h0"] = vector_to_json(*t.h0);
    if (t.y0)
      rec["y0"] = *t.y0 ? 1 : 0;
    os << rec.dump() << '\n';
  }
}

TraceSet read_traces(std::istream& is) {
  TraceSet set;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (blank(line))
      continue;
    const Json j = parse_line(line, lineno);
    if (!j.is_object())
      throw FormatError("line " + std::to_string(lineno) + ": expected an object");
    try {
      if (!j.contains("steps")) {
        if (!set.traces.empty())
          throw FormatError("header record after the first trace");
        if (j.contains("dim"))
          set.dim = size_from_json(j.at("dim"), "dim");
        if (j.contains("hidden_dim"))
          set.hidden_dim = size_from_json(j.at("hidden_dim"), "hidden_dim");
        if (j.contains("y0_default"))
          set.y0_default = bit_from_json(j.at("y0_default"), "y0_default");
        continue;
      }
      Trace t;
      for (const auto& s : j.at("steps")) {
        TraceStep step;
        step.x = vector_from_json(field(s, "x"), "x");
        step.h = vector_from_json(field(s, "h"), "h");
        step.y = bit_from_json(field(s, "y"), "y");
        t.steps.push_back(std::move(step));
      }
      if (j.contains("h0"))
        t.h0 = vector_from_json(j.at("h0"), "h0");
      if (j.contains("y0"))
        t.y0 = bit_from_json(j.at("y0"), "y0");
      set.traces.push_back(std::move(t));
    } catch (const FormatError& e) {
      throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
    } catch (const Json::exception& e) {
      throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  validate(set);
  return set;
}

TraceSet read_traces(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_traces(in);
}

void write_traces(const std::filesystem::path& path, const TraceSet& set) {
  auto out = open_out(path);
  write_traces(out, set);
  if (!out)
    throw FormatError("failed writing " + path.string());
}

void write_words(std::ostream& os, const std::vector<Word>& words) {
  for (const auto& w : words)
    os << Json{{"word", word_to_json(w)}}.dump() << '\n';
}

std::vector<Word> read_words(std::istream& is) {
  std::vector<Word> words;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (blank(line))
      continue;
    const Json j = parse_line(line, lineno);
    try {
      words.push_back(word_from_json(field(j, "word")));
    } catch (const Error& e) {
      throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return words;
}

std::vector<Word> read_words(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_words(in);
}

Json report_to_json(const EvalReport& r, const LatticeAutomaton& a, const std::vector<Word>* words) {
  Json j;
  j["n_words"] = r.n_words;
  j["agreements"] = r.agreements;
  j["type1_count"] = r.type1;
  j["type2_count"] = r.type2;
  j["fidelity_pct"] = r.fidelity_pct();
  j["type1_pct"] = r.type1_pct();
  j["type2_pct"] = r.type2_pct();
  j["states"] = a.state_count();
  j["transitions"] = a.transition_count();
  if (!r.disagreements.empty() || words) {
    Json d = Json::array();
    for (const auto& x : r.disagreements) {
      Json e;
      e["index"] = x.index;
      if (words)
        e["word"] = word_to_json(words->at(x.index));
      e["oracle"] = x.oracle ? 1 : 0;
      e["automaton"] = x.automaton ? 1 : 0;
      d.push_back(std::move(e));
    }
    j["disagreements"] = std::move(d);
  }
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  auto out = open_out(path);
  out << text;
  if (!out)
    throw FormatError("failed writing " + path.string());
}

} // namespace ila
