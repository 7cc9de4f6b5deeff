// Copyright 2026 The revgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "revgate/error.hpp"
#include "revgate/gate.hpp"
#include "revgate/metrics.hpp"
#include "revgate/netlist.hpp"
#include "revgate/qcost.hpp"
#include "revgate/synth.hpp"

namespace revgate::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Table, Csv, Json };

// Bad command line or unreadable input; exits 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  Format format = Format::Table;
  GateLibrary library;
  CostRegistry costs;
  std::ostream& out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text,
                std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

// First significant character decides: netlists start with a directive.
bool looks_like_netlist(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    return line[first] == '.';
  }
  return false;
}

using Target = std::variant<const GateDef*, Circuit>;

// A built-in or loaded gate name, a gate file, or a netlist file.
Target resolve(Context& ctx, const std::string& what) {
  if (ctx.library.contains(what)) return &ctx.library.get(what);
  std::ifstream probe(what);
  if (!probe) throw UsageError("'" + what + "' is neither a known gate nor a "
                               "readable file");
  const std::string text = read_file(what);
  if (looks_like_netlist(text)) return parse_netlist(text, ctx.library);
  GateDef g = parse_gate_file(text);
  const std::string name = g.name();
  ctx.library.add(std::move(g));
  return &ctx.library.get(name);
}

Circuit resolve_netlist(Context& ctx, const std::string& path) {
  Target t = resolve(ctx, path);
  if (auto* c = std::get_if<Circuit>(&t)) return std::move(*c);
  throw UsageError("'" + path + "' is a gate, not a netlist");
}

void require_not_csv(const Context& ctx, const char* command) {
  if (ctx.format == Format::Csv) {
    throw UsageError(std::string("csv output is not available for '") +
                     command + "'");
  }
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i];
  }
  return s;
}

std::string bits_of(std::uint32_t word, const std::vector<unsigned>& lines,
                    unsigned width) {
  std::string s;
  for (unsigned l : lines) {
    s += ((word >> line_shift(width, l)) & 1u) ? '1' : '0';
  }
  return s;
}

// ---- truthtable ----------------------------------------------------------

struct Table {
  std::vector<std::string> in_names;
  std::vector<std::string> out_names;
  std::vector<std::pair<std::string, std::string>> rows;
};

Table gate_table(const GateDef& g) {
  Table t{g.inputs(), g.output_names(), {}};
  for (std::uint32_t i = 0; i < g.table().size(); ++i) {
    t.rows.emplace_back(BitVector(g.width(), i).to_string(),
                        BitVector(g.width(), g.apply(i)).to_string());
  }
  return t;
}

// Free inputs against useful outputs.
Table circuit_table(const Circuit& c) {
  Table t{c.free_inputs(), c.outputs(), {}};
  std::vector<unsigned> outs;
  for (const auto& name : c.outputs()) outs.push_back(c.terminal_position(name));
  const auto tables = circuit_permutation(c);
  const unsigned nfree = static_cast<unsigned>(t.in_names.size());
  for (std::uint32_t a = 0; a < tables.restricted.size(); ++a) {
    std::string in = nfree ? BitVector(nfree, a).to_string() : "";
    t.rows.emplace_back(in, bits_of(tables.restricted[a], outs, c.width()));
  }
  return t;
}

void print_table(const Context& ctx, const Table& t) {
  switch (ctx.format) {
    case Format::Json: {
      Json rows = Json::array();
      for (const auto& [in, out] : t.rows) rows.push_back({{"in", in}, {"out", out}});
      Json doc{{"inputs", t.in_names}, {"outputs", t.out_names},
               {"rows", rows}};
      ctx.out << doc.dump(2) << '\n';
      return;
    }
    case Format::Csv: {
      std::vector<std::string> header = t.in_names;
      header.insert(header.end(), t.out_names.begin(), t.out_names.end());
      ctx.out << join(header, ",") << '\n';
      for (const auto& [in, out] : t.rows) {
        std::string line;
        for (char ch : in + out) {
          if (!line.empty()) line += ',';
          line += ch;
        }
        ctx.out << line << '\n';
      }
      return;
    }
    case Format::Table:
      ctx.out << join(t.in_names, " ") << " -> " << join(t.out_names, " ")
              << '\n';
      for (const auto& [in, out] : t.rows) {
        ctx.out << in << " → " << out << '\n';
      }
      return;
  }
}

int cmd_truthtable(Context& ctx, const std::string& what) {
  Target t = resolve(ctx, what);
  if (auto* g = std::get_if<const GateDef*>(&t)) {
    print_table(ctx, gate_table(**g));
  } else {
    print_table(ctx, circuit_table(std::get<Circuit>(t)));
  }
  return kExitOk;
}

// ---- simulate ------------------------------------------------------------

std::uint32_t parse_bits(const std::string& bits, std::size_t expected) {
  if (bits.size() != expected) {
    throw UsageError("--input needs " + std::to_string(expected) +
                     " bits, got '" + bits + "'");
  }
  std::uint32_t v = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw UsageError("--input must be a string of 0 and 1, got '" + bits +
                       "'");
    }
    v = (v << 1) | static_cast<std::uint32_t>(ch == '1');
  }
  return v;
}

int cmd_simulate(Context& ctx, const std::string& path,
                 const std::optional<std::string>& input, bool all) {
  const Circuit c = resolve_netlist(ctx, path);
  const auto free = c.free_inputs();
  if (input.has_value() == all) {
    throw UsageError("simulate needs exactly one of --input or --all");
  }
  std::vector<std::uint32_t> assignments;
  if (all) {
    for (std::uint32_t a = 0; a < (1u << free.size()); ++a) {
      assignments.push_back(a);
    }
  } else {
    assignments.push_back(parse_bits(*input, free.size()));
  }
  const auto& outs = c.outputs();
  const auto& garbage = c.garbage();
  Json rows = Json::array();
  if (ctx.format == Format::Csv) {
    std::vector<std::string> header = free;
    header.insert(header.end(), outs.begin(), outs.end());
    header.insert(header.end(), garbage.begin(), garbage.end());
    ctx.out << join(header, ",") << '\n';
  }
  for (std::uint32_t a : assignments) {
    std::map<std::string, bool> in;
    for (std::size_t i = 0; i < free.size(); ++i) {
      in[free[i]] = (a >> (free.size() - 1 - i)) & 1u;
    }
    const auto values = simulate(c, in);
    auto val = [&values](const std::string& n) { return values.at(n) ? 1 : 0; };
    if (ctx.format == Format::Json) {
      Json jin = Json::object(), jout = Json::object(), jg = Json::object();
      for (const auto& n : free) jin[n] = in.at(n) ? 1 : 0;
      for (const auto& n : outs) jout[n] = val(n);
      for (const auto& n : garbage) jg[n] = val(n);
      rows.push_back({{"inputs", jin}, {"outputs", jout}, {"garbage", jg}});
    } else if (ctx.format == Format::Csv) {
      std::vector<std::string> cells;
      for (const auto& n : free) cells.push_back(in.at(n) ? "1" : "0");
      for (const auto& n : outs) cells.push_back(std::to_string(val(n)));
      for (const auto& n : garbage) cells.push_back(std::to_string(val(n)));
      ctx.out << join(cells, ",") << '\n';
    } else {
      std::vector<std::string> lhs, rhs, g;
      for (const auto& n : free) lhs.push_back(n + "=" + (in.at(n) ? "1" : "0"));
      for (const auto& n : outs) rhs.push_back(n + "=" + std::to_string(val(n)));
      for (const auto& n : garbage) g.push_back(n + "=" + std::to_string(val(n)));
      ctx.out << join(lhs, " ") << " -> " << join(rhs, " ");
      if (!g.empty()) ctx.out << "  (garbage " << join(g, " ") << ")";
      ctx.out << '\n';
    }
  }
  if (ctx.format == Format::Json) ctx.out << rows.dump(2) << '\n';
  return kExitOk;
}

// ---- check ---------------------------------------------------------------

int cmd_check(Context& ctx, const std::string& path) {
  require_not_csv(ctx, "check");
  const Circuit c = resolve_netlist(ctx, path);
  const AuditReport r = audit(c, ctx.costs);
  std::optional<std::pair<std::uint32_t, std::uint32_t>> collision;
  if (!r.reversible) {
    std::vector<std::uint32_t> full(std::size_t{1} << c.width());
    for (std::uint32_t i = 0; i < full.size(); ++i) full[i] = c.evaluate(i);
    collision = find_collision(full);
  }
  if (ctx.format == Format::Json) {
    Json doc{{"width", r.width},
             {"gates", r.gate_count},
             {"constant_inputs", r.constant_inputs},
             {"garbage_outputs", r.garbage_outputs},
             {"quantum_cost", r.quantum_cost.known()
                                  ? Json(*r.quantum_cost.value)
                                  : Json("Unknown")},
             {"quantum_cost_declared_only", r.quantum_cost.declared_only},
             {"reversible", r.reversible},
             {"warnings", r.warnings}};
    if (collision) {
      doc["witness"] = {BitVector(c.width(), collision->first).to_string(),
                        BitVector(c.width(), collision->second).to_string()};
    }
    ctx.out << doc.dump(2) << '\n';
  } else {
    ctx.out << "width            " << r.width << '\n'
            << "gates            " << r.gate_count << '\n'
            << "constant inputs  " << r.constant_inputs << '\n'
            << "garbage outputs  " << r.garbage_outputs << '\n'
            << "quantum cost     " << r.quantum_cost.to_string() << '\n'
            << "reversible       " << (r.reversible ? "yes" : "no") << '\n';
    for (const auto& w : r.warnings) ctx.out << "warning: " << w << '\n';
    if (collision) {
      ctx.out << "witness: inputs "
              << BitVector(c.width(), collision->first).to_string() << " and "
              << BitVector(c.width(), collision->second).to_string()
              << " collide\n";
    }
  }
  return r.reversible ? kExitOk : kExitVerifyFailed;
}

// ---- cost ----------------------------------------------------------------

struct Mismatch {
  std::size_t row, col;
  UnitaryMatrix::Complex got, expected;
};

// First entry that differs after phase normalization, if any.
std::optional<Mismatch> unitary_mismatch(const PrimitiveSequence& seq,
                                         const TruthPermutation& target) {
  const UnitaryMatrix u = unitary_of(seq);
  const UnitaryMatrix p = UnitaryMatrix::permutation(target);
  // Column 0 of the permutation holds its one nonzero entry at row target(0).
  UnitaryMatrix::Complex phase = u(target(0), 0);
  if (std::abs(phase) < 0.5) return Mismatch{target(0), 0, u(target(0), 0), 1.0};
  phase /= std::abs(phase);
  for (std::size_t r = 0; r < p.dim(); ++r) {
    for (std::size_t c = 0; c < p.dim(); ++c) {
      const auto got = u(r, c) / phase;
      if (std::abs(got - p(r, c)) > kUnitaryTolerance) {
        return Mismatch{r, c, got, p(r, c)};
      }
    }
  }
  return std::nullopt;
}

std::string complex_string(UnitaryMatrix::Complex z) {
  auto clean = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
  std::ostringstream os;
  os << std::setprecision(6) << clean(z.real())
     << (clean(z.imag()) < 0 ? "-" : "+") << std::abs(clean(z.imag())) << "i";
  return os.str();
}

Json mismatch_json(const Mismatch& m) {
  return {{"row", m.row},
          {"column", m.col},
          {"got", complex_string(m.got)},
          {"expected", complex_string(m.expected)}};
}

std::string mismatch_text(const Mismatch& m) {
  return "entry (" + std::to_string(m.row) + ", " + std::to_string(m.col) +
         ") is " + complex_string(m.got) + ", expected " +
         complex_string(m.expected);
}

int cost_of_gate(Context& ctx, const std::string& name, bool verify_unitary) {
  const GateDef& g = ctx.library.get(name);
  const QuantumCost qc = ctx.costs.cost_of(name);
  const CostRegistry::Entry* entry = ctx.costs.find(name);
  Json doc{{"gate", name},
           {"cost", qc.known() ? Json(*qc.value) : Json("Unknown")}};
  std::string line = "cost=" + qc.to_string();
  int code = kExitOk;
  if (entry && entry->sequence) {
    doc["sequence"] = entry->sequence->to_string();
    doc["steps"] = entry->sequence->length();
  }
  if (verify_unitary) {
    if (!entry || !entry->sequence) {
      doc["unitary"] = "no sequence";
      line += ", no sequence to verify";
      code = kExitVerifyFailed;
    } else if (auto m = unitary_mismatch(*entry->sequence, g.table())) {
      doc["unitary"] = "mismatch";
      doc["witness"] = mismatch_json(*m);
      line += ", unitary MISMATCH: " + mismatch_text(*m);
      code = kExitVerifyFailed;
    } else {
      doc["unitary"] = "verified";
      line += ", unitary verified";
    }
  }
  if (ctx.format == Format::Json) {
    ctx.out << doc.dump(2) << '\n';
  } else {
    ctx.out << line << '\n';
    if (entry && entry->sequence) {
      ctx.out << "sequence: " << entry->sequence->to_string() << '\n';
    }
  }
  return code;
}

int cost_of_netlist(Context& ctx, const std::string& path,
                    bool verify_unitary) {
  const Circuit c = resolve_netlist(ctx, path);
  const QuantumCost total = quantum_cost(c, ctx.costs);
  Json gates = Json::array();
  std::ostringstream text;
  PrimitiveSequence whole(c.width());
  bool have_all = true;
  for (const auto& inst : c.gates()) {
    const auto& name = inst.gate->name();
    const QuantumCost qc = ctx.costs.cost_of(name);
    gates.push_back({{"gate", name},
                     {"cost", qc.known() ? Json(*qc.value) : Json("Unknown")}});
    text << "  " << name << " (" << join(inst.input_names, " ")
         << "): " << qc.to_string() << '\n';
    const auto* entry = ctx.costs.find(name);
    if (entry && entry->sequence) {
      whole.append(*entry->sequence, inst.positions);
    } else {
      have_all = false;
    }
  }
  Json doc{{"netlist", path},
           {"cost", total.known() ? Json(*total.value) : Json("Unknown")},
           {"gates", gates}};
  std::string line = "cost=" + total.to_string();
  int code = kExitOk;
  if (verify_unitary) {
    if (!have_all) {
      doc["unitary"] = "no sequence";
      line += ", some gate has no sequence to verify";
      code = kExitVerifyFailed;
    } else if (c.width() > kMaxUnitaryWidth) {
      throw UsageError("unitary verification supports at most " +
                       std::to_string(kMaxUnitaryWidth) + " lines");
    } else if (auto m =
                   unitary_mismatch(whole, circuit_permutation(c).full)) {
      doc["unitary"] = "mismatch";
      doc["witness"] = mismatch_json(*m);
      line += ", unitary MISMATCH: " + mismatch_text(*m);
      code = kExitVerifyFailed;
    } else {
      doc["unitary"] = "verified";
      line += ", unitary verified";
    }
  }
  if (ctx.format == Format::Json) {
    ctx.out << doc.dump(2) << '\n';
  } else {
    ctx.out << line << '\n' << text.str();
  }
  return code;
}

// ---- metrics / compare ---------------------------------------------------

ConstantBindings parse_bindings(const std::vector<std::string>& specs) {
  ConstantBindings b;
  for (const auto& s : specs) {
    const auto eq = s.find('=');
    const std::string value = eq == std::string::npos ? "" : s.substr(eq + 1);
    if (eq == std::string::npos || eq == 0 || (value != "0" && value != "1")) {
      throw UsageError("--const expects NAME=0 or NAME=1, got '" + s + "'");
    }
    b[s.substr(0, eq)] = value == "1";
  }
  return b;
}

Json rows_json(const std::vector<ComplexityRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j{{"name", r.name}};
    if (r.ops) {
      j["alpha"] = r.ops->alpha;
      j["beta"] = r.ops->beta;
      j["delta"] = r.ops->delta;
      j["T"] = r.ops->formula();
    } else {
      j["alpha"] = nullptr;
      j["beta"] = nullptr;
      j["delta"] = nullptr;
      j["T"] = nullptr;
    }
    j["quantum_cost"] = r.quantum_cost.known() ? Json(*r.quantum_cost.value)
                                               : Json("Unknown");
    j["quantum_cost_declared_only"] = r.quantum_cost.declared_only;
    j["reference"] = r.reference;
    j["note"] = r.note;
    out.push_back(j);
  }
  return out;
}

void print_rows(const Context& ctx, const std::vector<ComplexityRow>& rows) {
  switch (ctx.format) {
    case Format::Json:
      ctx.out << rows_json(rows).dump(2) << '\n';
      return;
    case Format::Csv:
      ctx.out << to_csv(rows);
      return;
    case Format::Table:
      ctx.out << to_table(rows);
      return;
  }
}

int cmd_metrics(Context& ctx, const std::vector<std::string>& targets,
                const std::vector<std::string>& consts) {
  const ConstantBindings bindings = parse_bindings(consts);
  std::vector<ComplexityRow> rows;
  std::set<std::string> used;
  for (const auto& what : targets) {
    Target t = resolve(ctx, what);
    auto* g = std::get_if<const GateDef*>(&t);
    if (!g) throw UsageError("'" + what + "' is a netlist, not a gate");
    // A binding applies to each listed gate that has such an input.
    ConstantBindings mine;
    for (const auto& [name, value] : bindings) {
      const auto& ins = (*g)->inputs();
      if (std::find(ins.begin(), ins.end(), name) != ins.end()) {
        mine[name] = value;
        used.insert(name);
      }
    }
    rows.push_back(complexity_row(**g, mine, ctx.costs));
  }
  for (const auto& [name, value] : bindings) {
    if (!used.count(name)) {
      throw UsageError("no listed gate has an input named '" + name + "'");
    }
  }
  print_rows(ctx, rows);
  return kExitOk;
}

int cmd_compare(Context& ctx, const std::vector<std::string>& gate_files) {
  std::vector<GateDef> overrides;
  for (const auto& f : gate_files) {
    overrides.push_back(parse_gate_file(read_file(f)));
  }
  print_rows(ctx, adder_gate_comparison(ctx.costs, overrides));
  return kExitOk;
}

// ---- synth ---------------------------------------------------------------

int cmd_synth(Context& ctx, const std::string& hex, unsigned n,
              const std::optional<std::string>& emit) {
  require_not_csv(ctx, "synth");
  if (n > kMaxSynthArity) {
    throw UsageError("--n must be at most " + std::to_string(kMaxSynthArity));
  }
  const TruthTable f = TruthTable::from_hex(hex, n);
  const auto terms = pprm(f);
  const Circuit c = synthesize(f);
  const AuditReport r = audit(c, ctx.costs);

  // Check every row against the requested function.
  const unsigned out_pos = c.terminal_position(c.outputs().front());
  std::optional<std::uint32_t> bad;
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    if (simulate_lines(c, a)[out_pos] != f(a)) {
      bad = a;
      break;
    }
  }
  std::optional<PFAGConfig> config;
  if (n <= 2) config = find_configuration(f);

  std::vector<std::string> term_text;
  for (const auto& m : terms) term_text.push_back(m.to_string());
  if (ctx.format == Format::Json) {
    Json doc{{"truth", f.to_hex()},
             {"arity", n},
             {"pprm", term_text},
             {"gates", r.gate_count},
             {"lines", r.width},
             {"constant_inputs", r.constant_inputs},
             {"garbage_outputs", r.garbage_outputs},
             {"quantum_cost", r.quantum_cost.known()
                                  ? Json(*r.quantum_cost.value)
                                  : Json("Unknown")},
             {"verified", !bad.has_value()}};
    if (config) doc["single_gate"] = config->to_string();
    if (bad) {
      doc["witness"] = n ? BitVector(n, *bad).to_string() : std::string();
    }
    ctx.out << doc.dump(2) << '\n';
  } else {
    ctx.out << "function  " << f.to_hex() << " over " << n << " inputs\n"
            << "pprm      " << (terms.empty() ? "0" : join(term_text, " ^ "))
            << '\n'
            << "gates     " << r.gate_count << " PFAG\n"
            << "lines     " << r.width << " (" << r.constant_inputs
            << " constant, " << r.garbage_outputs << " garbage)\n"
            << "cost      " << r.quantum_cost.to_string() << '\n';
    if (config) ctx.out << "single    " << config->to_string() << '\n';
    if (bad) {
      ctx.out << "MISMATCH at input "
              << (n ? BitVector(n, *bad).to_string() : std::string()) << '\n';
    } else {
      ctx.out << "verified on all " << f.size() << " inputs\n";
    }
  }
  if (emit) write_file(*emit, c.to_netlist(), ctx.out);
  return bad ? kExitVerifyFailed : kExitOk;
}

// ---- search-decomposition ------------------------------------------------

// Guards against searches that run for minutes or exhaust memory.
constexpr unsigned kMaxSearchLen = 6;
constexpr unsigned kMaxSearchWidth = 4;

int cmd_search(Context& ctx, const std::string& name, unsigned max_len,
               const std::string& metric, bool with_not) {
  require_not_csv(ctx, "search-decomposition");
  const GateDef& g = ctx.library.get(name);
  if (g.width() > kMaxSearchWidth) {
    throw UsageError("search supports gates of at most " +
                     std::to_string(kMaxSearchWidth) + " lines");
  }
  if (max_len > kMaxSearchLen) {
    throw UsageError("--max-len must be at most " +
                     std::to_string(kMaxSearchLen));
  }
  SearchOptions opts;
  opts.metric =
      metric == "steps" ? SearchMetric::Steps : SearchMetric::TwoLine;
  opts.include_not = with_not;
  SearchStats stats;
  const auto found = search_min_sequence(g.table(), max_len, opts, &stats);
  if (ctx.format == Format::Json) {
    Json doc{{"gate", name},
             {"metric", metric},
             {"max_len", max_len},
             {"found", found.has_value()}};
    if (found) {
      doc["sequence"] = found->to_string();
      doc["cost"] = found->cost();
      doc["steps"] = found->length();
      doc["verified"] = verify(*found, g);
    }
    doc["distinct_unitaries"] = stats.distinct_unitaries;
    doc["expanded"] = stats.expanded;
    ctx.out << doc.dump(2) << '\n';
  } else if (found) {
    ctx.out << found->to_string() << '\n'
            << "cost=" << found->cost() << ", steps=" << found->length()
            << ", " << (verify(*found, g) ? "unitary verified" : "UNVERIFIED")
            << '\n';
  } else {
    ctx.out << "no realization of " << name << " within " << max_len
            << (opts.metric == SearchMetric::Steps ? " steps" : " cost")
            << '\n';
  }
  return kExitOk;
}

// ---- adder ---------------------------------------------------------------

int cmd_adder(Context& ctx, unsigned bits, const std::optional<std::string>& emit,
              bool exhaustive) {
  require_not_csv(ctx, "adder");
  const Circuit c = ripple_adder(bits);
  const AuditReport r = audit(c, ctx.costs);

  std::size_t checked = 0;
  std::optional<std::string> witness;
  if (exhaustive) {
    // Carry-in is a constant line; drive it directly at full width.
    const unsigned w = c.width();
    const unsigned c0 = c.line_position("c0");
    for (std::uint32_t cin = 0; cin <= 1 && !witness; ++cin) {
      for (std::uint32_t a = 0; a < (1u << bits) && !witness; ++a) {
        for (std::uint32_t b = 0; b < (1u << bits) && !witness; ++b) {
          std::uint32_t in = cin << line_shift(w, c0);
          for (unsigned i = 0; i < bits; ++i) {
            in |= ((a >> i) & 1u) << line_shift(w, c.line_position("a" + std::to_string(i)));
            in |= ((b >> i) & 1u) << line_shift(w, c.line_position("b" + std::to_string(i)));
          }
          const std::uint32_t outw = c.evaluate(in);
          std::uint32_t value = 0;
          for (unsigned i = 0; i <= bits; ++i) {
            const std::string name =
                i < bits ? "s" + std::to_string(i) : "c" + std::to_string(bits);
            value |= ((outw >> line_shift(w, c.terminal_position(name))) & 1u)
                     << i;
          }
          ++checked;
          if (value != a + b + cin) {
            witness = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                      " cin=" + std::to_string(cin) + " gave " +
                      std::to_string(value);
          }
        }
      }
    }
  }
  if (ctx.format == Format::Json) {
    Json doc{{"bits", bits},
             {"lines", r.width},
             {"gates", r.gate_count},
             {"constant_inputs", r.constant_inputs},
             {"garbage_outputs", r.garbage_outputs},
             {"quantum_cost", r.quantum_cost.known()
                                  ? Json(*r.quantum_cost.value)
                                  : Json("Unknown")},
             {"reversible", r.reversible}};
    if (exhaustive) {
      doc["checked"] = checked;
      doc["verified"] = !witness.has_value();
      if (witness) doc["witness"] = *witness;
    }
    ctx.out << doc.dump(2) << '\n';
  } else {
    ctx.out << bits << "-bit ripple adder: " << r.gate_count << " PFAG, "
            << r.width << " lines, " << r.constant_inputs << " constant, "
            << r.garbage_outputs << " garbage, quantum cost "
            << r.quantum_cost.to_string() << '\n';
    if (exhaustive) {
      if (witness) {
        ctx.out << "MISMATCH: " << *witness << '\n';
      } else {
        ctx.out << "verified " << checked
                << " (a, b, carry-in) triples against integer addition\n";
      }
    }
  }
  if (emit) write_file(*emit, c.to_netlist(), ctx.out);
  return witness ? kExitVerifyFailed : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Reversible logic workbench: gates, netlists, quantum cost, "
               "complexity metrics and synthesis.",
               "revgate"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  bool json = false;
  std::vector<std::string> gate_files;
  std::string cost_file;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_flag("--json", json, "Same as --format json");
  app.add_option("--gates", gate_files,
                 "Gate-definition file to load (repeatable)")
      ->allow_extra_args(false);
  app.add_option("--costs", cost_file,
                 "Cost registry file with 'cost NAME = n' lines");

  std::string target;
  std::vector<std::string> targets;
  std::optional<std::string> input, emit;
  bool all = false, verify_unitary = false, exhaustive = false,
       with_not = false;
  std::string gate_name, hex, metric = "two-line";
  std::vector<std::string> consts;
  unsigned arity = 0, max_len = 0, bits = 0;

  auto* tt = app.add_subcommand("truthtable", "Print a gate or netlist table");
  tt->add_option("target", target, "Gate name, gate file or netlist")
      ->required();

  auto* sim = app.add_subcommand("simulate", "Simulate a netlist");
  sim->add_option("netlist", target)->required();
  sim->add_option("--input", input,
                  "Free-input bits in declaration order, first line first");
  sim->add_flag("--all", all, "Every free-input assignment");

  auto* chk = app.add_subcommand("check", "Audit a netlist");
  chk->add_option("netlist", target)->required();

  auto* cost = app.add_subcommand("cost", "Quantum cost of a gate or netlist");
  auto* cost_gate = cost->add_option("--gate", gate_name, "Gate name");
  auto* cost_net = cost->add_option("netlist", target, "Netlist file");
  cost_gate->excludes(cost_net);
  cost->add_flag("--verify-unitary", verify_unitary,
                 "Check the primitive sequence against the permutation");

  auto* met = app.add_subcommand("metrics", "Operation counts of gates");
  met->add_option("target", targets, "Gate names or gate files")->required();
  met->add_option("--const", consts, "Bind an input, e.g. D=0 (repeatable)");

  auto* cmp = app.add_subcommand("compare", "Full-adder gate comparison");

  auto* syn = app.add_subcommand("synth", "Synthesize a function from PFAGs");
  syn->add_option("--truth", hex, "Hex truth table, e.g. E8")->required();
  syn->add_option("--n", arity, "Number of inputs")->required();
  syn->add_option("--emit", emit, "Write the netlist here ('-' = stdout)");

  auto* srch = app.add_subcommand("search-decomposition",
                                  "Cheapest primitive sequence for a gate");
  srch->add_option("--gate", gate_name)->required();
  srch->add_option("--max-len", max_len, "Largest cost (or step count)")
      ->required();
  srch->add_option("--metric", metric, "two-line (default) or steps")
      ->check(CLI::IsMember({"two-line", "steps"}));
  srch->add_flag("--with-not", with_not, "Include NOT placements");

  auto* add = app.add_subcommand("adder", "Build a PFAG ripple-carry adder");
  add->add_option("--bits", bits, "Width in bits")->required();
  add->add_option("--emit", emit, "Write the netlist here ('-' = stdout)");
  add->add_flag("--exhaustive", exhaustive,
                "Check every (a, b, carry-in) against integer addition");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  Context ctx{Format::Table, GateLibrary(), CostRegistry(), out};
  if (json || format == "json") {
    ctx.format = Format::Json;
  } else if (format == "csv") {
    ctx.format = Format::Csv;
  }

  try {
    for (const auto& f : gate_files) {
      ctx.library.add(parse_gate_file(read_file(f)));
    }
    if (!cost_file.empty()) ctx.costs.load(read_file(cost_file));

    if (tt->parsed()) return cmd_truthtable(ctx, target);
    if (sim->parsed()) return cmd_simulate(ctx, target, input, all);
    if (chk->parsed()) return cmd_check(ctx, target);
    if (cost->parsed()) {
      require_not_csv(ctx, "cost");
      if (!gate_name.empty()) {
        return cost_of_gate(ctx, gate_name, verify_unitary);
      }
      if (target.empty()) throw UsageError("cost needs --gate or a netlist");
      return cost_of_netlist(ctx, target, verify_unitary);
    }
    if (met->parsed()) return cmd_metrics(ctx, targets, consts);
    if (cmp->parsed()) return cmd_compare(ctx, gate_files);
    if (syn->parsed()) return cmd_synth(ctx, hex, arity, emit);
    if (srch->parsed()) {
      return cmd_search(ctx, gate_name, max_len, metric, with_not);
    }
    if (add->parsed()) return cmd_adder(ctx, bits, emit, exhaustive);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace revgate::cli
