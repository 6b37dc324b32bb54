#include "depseq/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace depseq {
namespace {

using json = nlohmann::json;

json to_json(const Alphabet& alphabet) {
  json out = json::array();
  for (const auto& s : alphabet) out.push_back(s.token());
  return out;
}

json to_json(const Word& word) {
  json out = json::array();
  for (const auto& s : word) out.push_back(s.token());
  return out;
}

Symbol symbol_from(const json& j) {
  const auto& token = j.get_ref<const std::string&>();
  if (token.empty()) throw ParseError(0, "empty symbol token");
  return Symbol(token);
}

Word word_from(const json& j) {
  Word out;
  for (const auto& item : j) out.push_back(symbol_from(item));
  return out;
}

Alphabet alphabet_from(const json& j) {
  Alphabet out;
  for (const auto& item : j) out.insert(symbol_from(item));
  return out;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
}

// Wraps structural access errors (missing keys, wrong types) as ParseError.
template <class F>
auto structured(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(0, e.what());
  }
}

// ---- automata -------------------------------------------------------------

json transitions_to_json(const std::vector<std::string>& states,
                         const std::vector<TransitionMap>& transitions) {
  json out = json::array();
  for (StateId s = 0; s < states.size(); ++s) {
    for (const auto& [symbol, target] : transitions[s]) {
      out.push_back({{"from", states[s]}, {"symbol", symbol.token()}, {"to", states.at(target)}});
    }
  }
  return out;
}

json state_list(const Transducer& t, StateKind kind) {
  json out = json::array();
  for (StateId s = 0; s < t.size(); ++s) {
    if (t.kinds[s] == kind) out.push_back(t.states[s]);
  }
  return out;
}

struct StateIndex {
  std::vector<std::string> names;
  std::map<std::string, StateId> index;
  std::vector<Violation> violations;

  explicit StateIndex(const json& states) {
    for (const auto& item : states) {
      auto name = item.get<std::string>();
      if (!index.emplace(name, names.size()).second) {
        violations.push_back({ViolationKind::DuplicateStateName, {name}, {}});
      }
      names.push_back(std::move(name));
    }
  }

  std::optional<StateId> find(const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    violations.push_back({ViolationKind::UnknownState, {name}, {}});
    return std::nullopt;
  }
};

std::vector<TransitionMap> transitions_from(const json& j, StateIndex& states) {
  std::vector<TransitionMap> rows(states.names.size());
  for (const auto& item : j) {
    const auto from = states.find(item.at("from").get<std::string>());
    const auto to = states.find(item.at("to").get<std::string>());
    const Symbol symbol = symbol_from(item.at("symbol"));
    if (!from || !to) continue;
    if (!rows[*from].emplace(symbol, *to).second) {
      states.violations.push_back({ViolationKind::DuplicateTransition, {states.names[*from]}, symbol});
    }
  }
  return rows;
}

void finish(std::vector<Violation> pending, std::vector<Violation> found, const char* what) {
  pending.insert(pending.end(), found.begin(), found.end());
  if (!pending.empty()) throw ValidationError(what, std::move(pending));
}

Producer producer_from(const json& doc) {
  StateIndex states(doc.at("states"));
  Producer p;
  p.alphabet = alphabet_from(doc.at("alphabet"));
  p.transitions = transitions_from(doc.at("transitions"), states);
  p.initial = states.find(doc.at("initial").get<std::string>()).value_or(0);
  p.states = states.names;
  finish(std::move(states.violations), validate_producer(p), "invalid producer document");
  return p;
}

Transducer transducer_from(const json& doc) {
  StateIndex states(doc.at("states"));
  Transducer t;
  t.input_alphabet = alphabet_from(doc.at("input_alphabet"));
  t.output_alphabet = alphabet_from(doc.at("output_alphabet"));
  t.deterministic = doc.value("deterministic", false);
  t.transitions = transitions_from(doc.at("transitions"), states);
  t.initial = states.find(doc.at("initial").get<std::string>()).value_or(0);

  std::vector<int> seen(states.names.size(), 0);
  t.kinds.assign(states.names.size(), StateKind::Output);
  for (const auto& [key, kind] : {std::pair{"input_states", StateKind::Input},
                                  std::pair{"output_states", StateKind::Output}}) {
    for (const auto& item : doc.at(key)) {
      if (auto s = states.find(item.get<std::string>())) {
        t.kinds[*s] = kind;
        ++seen[*s];
      }
    }
  }
  for (StateId s = 0; s < seen.size(); ++s) {
    if (seen[s] != 1) states.violations.push_back({ViolationKind::ShapeMismatch, {states.names[s]}, {}});
  }
  t.states = states.names;
  finish(std::move(states.violations), validate_transducer(t), "invalid transducer document");
  return t;
}

// ---- dot ------------------------------------------------------------------

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

template <TransitionSystem A, class ShapeOf>
std::string render_dot(const A& a, const std::string& name, const DotOptions& options,
                       ShapeOf shape_of) {
  std::ostringstream os;
  os << "digraph " << quoted(options.graph_name.empty() ? name : options.graph_name) << " {\n";
  os << "  rankdir=" << options.rankdir << ";\n";
  os << "  __start [label=\"\", shape=none, width=0, height=0];\n";
  for (StateId s = 0; s < a.states.size(); ++s) {
    os << "  " << quoted(a.states[s]) << " [shape=" << shape_of(s) << "];\n";
  }
  os << "  __start -> " << quoted(a.states.at(a.initial)) << ";\n";
  for (StateId s = 0; s < a.states.size(); ++s) {
    for (const auto& [symbol, target] : a.transitions[s]) {
      os << "  " << quoted(a.states[s]) << " -> " << quoted(a.states.at(target))
         << " [label=" << quoted(symbol.token()) << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

// ---- chain spec -----------------------------------------------------------

void put_sampler(json& j, const std::string& what, const SamplerSpec& spec) {
  j["min_" + what] = spec.min;
  j["max_" + what] = spec.max;
  j["skw_" + what] = spec.skewness;
  if (spec.custom) j["dist_" + what] = "custom";
}

void get_sampler(const json& j, const std::string& what, SamplerSpec& spec) {
  spec.min = j.value("min_" + what, spec.min);
  spec.max = j.value("max_" + what, spec.max);
  spec.skewness = j.value("skw_" + what, spec.skewness);
}

json to_json(const ProducerParams& p) {
  json j = json::object();
  put_sampler(j, "states", p.states);
  put_sampler(j, "alphabet", p.alphabet);
  put_sampler(j, "transitions", p.transitions);
  j["symbol_prefix"] = p.symbol_prefix;
  j["verbose"] = p.verbose;
  return j;
}

ProducerParams producer_params_from(const json& j) {
  ProducerParams p;
  get_sampler(j, "states", p.states);
  get_sampler(j, "alphabet", p.alphabet);
  get_sampler(j, "transitions", p.transitions);
  p.symbol_prefix = j.value("symbol_prefix", p.symbol_prefix);
  p.verbose = j.value("verbose", p.verbose);
  return p;
}

json to_json(const TransducerParams& p) {
  json j = json::object();
  put_sampler(j, "states", p.states);
  put_sampler(j, "alphabet", p.alphabet);
  put_sampler(j, "transitions", p.transitions);
  j["ratio_i_o"] = p.ratio_i_o;
  j["symbol_prefix"] = p.symbol_prefix;
  j["verbose"] = p.verbose;
  if (!p.read_input_alphabet.empty()) j["read_input_alphabet"] = to_json(p.read_input_alphabet);
  return j;
}

TransducerParams transducer_params_from(const json& j) {
  TransducerParams p;
  get_sampler(j, "states", p.states);
  get_sampler(j, "alphabet", p.alphabet);
  get_sampler(j, "transitions", p.transitions);
  p.ratio_i_o = j.value("ratio_i_o", p.ratio_i_o);
  p.symbol_prefix = j.value("symbol_prefix", p.symbol_prefix);
  p.verbose = j.value("verbose", p.verbose);
  if (j.contains("read_input_alphabet")) p.read_input_alphabet = alphabet_from(j.at("read_input_alphabet"));
  return p;
}

std::string_view kind_name(NoiseKind kind) {
  return kind == NoiseKind::InsertOrDelete ? "insdel" : "replace";
}

NoiseKind kind_from(const std::string& name) {
  if (name == "insdel") return NoiseKind::InsertOrDelete;
  if (name == "replace") return NoiseKind::Replacement;
  throw ParseError(0, "unknown noise kind '" + name + "'");
}

json to_json(const NoiseSpec& n) {
  json j = json::object();
  j["kind"] = kind_name(n.kind);
  j["n_symbols_change"] = n.n_symbols_change ? json(*n.n_symbols_change) : json(nullptr);
  j["noise_level"] = n.noise_level;
  j["prob_insert"] = n.prob_insert;
  if (!n.alphabet.empty()) j["alphabet"] = to_json(n.alphabet);
  return j;
}

NoiseSpec noise_spec_from(const json& j) {
  NoiseSpec n;
  n.kind = kind_from(j.value("kind", std::string("insdel")));
  if (j.contains("n_symbols_change") && !j.at("n_symbols_change").is_null()) {
    const auto count = j.at("n_symbols_change").get<long long>();
    if (count < 0) throw InvalidParams("n_symbols_change must be non-negative");
    n.n_symbols_change = static_cast<std::size_t>(count);
  }
  n.noise_level = j.value("noise_level", n.noise_level);
  n.prob_insert = j.value("prob_insert", n.prob_insert);
  if (j.contains("alphabet")) n.alphabet = alphabet_from(j.at("alphabet"));
  return n;
}

json to_json(const ChainSpec& spec) {
  json j = json::object();
  j["n_nodes"] = spec.n_nodes;
  j["seed"] = spec.seed;
  j["regime"] = to_string(spec.regime);
  j["lengths"] = spec.lengths;
  j["producer"] = to_json(spec.producer);
  j["transducers"] = json::array();
  for (const auto& t : spec.transducers) j["transducers"].push_back(to_json(t));
  j["noise"] = json::array();
  for (const auto& n : spec.noise) j["noise"].push_back(n ? to_json(*n) : json(nullptr));
  return j;
}

ChainSpec chain_spec_from(const json& j) {
  ChainSpec spec;
  spec.n_nodes = j.value("n_nodes", spec.n_nodes);
  spec.seed = j.value("seed", spec.seed);
  spec.regime = parse_regime(j.value("regime", std::string("clean")));
  if (j.contains("lengths")) spec.lengths = j.at("lengths").get<std::vector<std::size_t>>();
  if (j.contains("producer")) spec.producer = producer_params_from(j.at("producer"));
  if (j.contains("transducers")) {
    for (const auto& t : j.at("transducers")) spec.transducers.push_back(transducer_params_from(t));
  }
  if (j.contains("noise")) {
    for (const auto& n : j.at("noise")) {
      spec.noise.push_back(n.is_null() ? std::nullopt : std::optional(noise_spec_from(n)));
    }
  }
  return spec;
}

// ---- dataset --------------------------------------------------------------

json to_json(const NoiseRecord& r) {
  return {{"kind", kind_name(r.kind)},
          {"requested", r.requested},
          {"insertions", r.insertions},
          {"deletions", r.deletions},
          {"skipped_deletions", r.skipped_deletions},
          {"replacements", r.replacements}};
}

NoiseRecord noise_record_from(const json& j) {
  NoiseRecord r;
  r.kind = kind_from(j.at("kind").get<std::string>());
  r.requested = j.at("requested").get<std::size_t>();
  r.insertions = j.at("insertions").get<std::size_t>();
  r.deletions = j.at("deletions").get<std::size_t>();
  r.skipped_deletions = j.at("skipped_deletions").get<std::size_t>();
  r.replacements = j.at("replacements").get<std::size_t>();
  return r;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

std::string serialize_automaton(const Producer& p) {
  json doc = {{"format_version", kFormatVersion},
              {"kind", "producer"},
              {"states", p.states},
              {"initial", p.states.at(p.initial)},
              {"alphabet", to_json(p.alphabet)},
              {"transitions", transitions_to_json(p.states, p.transitions)}};
  return doc.dump(2) + "\n";
}

std::string serialize_automaton(const Transducer& t) {
  json doc = {{"format_version", kFormatVersion},
              {"kind", "transducer"},
              {"states", t.states},
              {"initial", t.states.at(t.initial)},
              {"deterministic", t.deterministic},
              {"input_alphabet", to_json(t.input_alphabet)},
              {"output_alphabet", to_json(t.output_alphabet)},
              {"input_states", state_list(t, StateKind::Input)},
              {"output_states", state_list(t, StateKind::Output)},
              {"transitions", transitions_to_json(t.states, t.transitions)}};
  return doc.dump(2) + "\n";
}

std::string serialize_automaton(const Automaton& a) {
  return std::visit([](const auto& x) { return serialize_automaton(x); }, a);
}

Automaton parse_automaton(std::string_view text) {
  const json doc = parse_document(text);
  return structured([&]() -> Automaton {
    if (!doc.is_object()) throw ParseError(0, "automaton document must be a JSON object");
    const int version = doc.at("format_version").get<int>();
    if (version != kFormatVersion) {
      throw ParseError(0, "unsupported format_version " + std::to_string(version));
    }
    const auto kind = doc.at("kind").get<std::string>();
    if (kind == "producer") return producer_from(doc);
    if (kind == "transducer") return transducer_from(doc);
    throw ParseError(0, "unknown automaton kind '" + kind + "'");
  });
}

std::string to_dot(const Producer& p, const DotOptions& options) {
  return render_dot(p, "producer", options, [](StateId) { return "circle"; });
}

std::string to_dot(const Transducer& t, const DotOptions& options) {
  return render_dot(t, "transducer", options,
                    [&](StateId s) { return t.is_input(s) ? "box" : "circle"; });
}

std::string to_dot(const Automaton& a, const DotOptions& options) {
  return std::visit([&](const auto& x) { return to_dot(x, options); }, a);
}

std::string chain_spec_to_json(const ChainSpec& spec) { return to_json(spec).dump(2) + "\n"; }

ChainSpec chain_spec_from_json(std::string_view text) {
  const json doc = parse_document(text);
  return structured([&] { return chain_spec_from(doc); });
}

std::string dataset_to_json(const ChainDataset& dataset) {
  json nodes = json::array();
  for (const auto& node : dataset.nodes) {
    json j = {{"id", node.id}, {"alphabet", to_json(node.alphabet)}, {"sequence", to_json(node.sequence)}};
    if (node.clean_sequence) j["clean_sequence"] = to_json(*node.clean_sequence);
    if (node.noise_record) j["noise_record"] = to_json(*node.noise_record);
    nodes.push_back(std::move(j));
  }
  json edges = json::array();
  for (const auto& [from, to] : dataset.edges) edges.push_back(json::array({from, to}));
  json doc = {{"meta",
               {{"format_version", kFormatVersion},
                {"seed", dataset.seed},
                {"spec", to_json(dataset.spec)},
                {"tool_version", dataset.tool_version}}},
              {"nodes", std::move(nodes)},
              {"edges", std::move(edges)}};
  return doc.dump(2) + "\n";
}

ChainDataset dataset_from_json(std::string_view text) {
  const json doc = parse_document(text);
  return structured([&] {
    ChainDataset d;
    const auto& meta = doc.at("meta");
    if (meta.value("format_version", kFormatVersion) != kFormatVersion) {
      throw ParseError(0, "unsupported dataset format_version");
    }
    d.seed = meta.at("seed").get<std::uint64_t>();
    d.spec = chain_spec_from(meta.at("spec"));
    d.tool_version = meta.at("tool_version").get<std::string>();
    for (const auto& j : doc.at("nodes")) {
      NodeRecord node;
      node.id = j.at("id").get<std::string>();
      node.alphabet = alphabet_from(j.at("alphabet"));
      node.sequence = word_from(j.at("sequence"));
      if (j.contains("clean_sequence")) node.clean_sequence = word_from(j.at("clean_sequence"));
      if (j.contains("noise_record")) node.noise_record = noise_record_from(j.at("noise_record"));
      d.nodes.push_back(std::move(node));
    }
    for (const auto& e : doc.at("edges")) {
      d.edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    }
    return d;
  });
}

std::string dataset_to_csv(const ChainDataset& dataset) {
  std::string out = "node_id,position,symbol\n";
  for (const auto& node : dataset.nodes) {
    for (std::size_t i = 0; i < node.sequence.size(); ++i) {
      out += csv_field(node.id) + "," + std::to_string(i) + "," +
             csv_field(node.sequence[i].token()) + "\n";
    }
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void write_dataset(const ChainDataset& dataset, const std::filesystem::path& path) {
  write_text_file(path, dataset_to_json(dataset));
}

ChainDataset read_dataset(const std::filesystem::path& path) {
  return dataset_from_json(read_text_file(path));
}

void write_dataset_csv(const ChainDataset& dataset, const std::filesystem::path& path) {
  write_text_file(path, dataset_to_csv(dataset));
}

}  // namespace depseq
