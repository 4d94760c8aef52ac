// Copyright 2026 The framesim Authors
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

#include "framesim/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace framesim {

namespace {

struct GateInfo {
  std::string_view name;
  GateKind kind;
};

constexpr std::array<GateInfo, 12> kGates{{
    {"h", GateKind::H},       {"p", GateKind::P},
    {"pdg", GateKind::PDG},   {"x", GateKind::X},
    {"y", GateKind::Y},       {"z", GateKind::Z},
    {"cnot", GateKind::CNOT}, {"tof", GateKind::TOF},
    {"crz", GateKind::CRZ},   {"t", GateKind::T},
    {"tdg", GateKind::TDG},   {"measure", GateKind::MEASURE},
}};

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool parse_index(const std::string& s, std::size_t& out) {
  if (s.empty()) return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

}  // namespace

std::string_view gate_name(GateKind kind) {
  return kGates[static_cast<std::size_t>(kind)].name;
}

std::size_t gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::CNOT:
    case GateKind::CRZ:
      return 2;
    case GateKind::TOF:
      return 3;
    default:
      return 1;
  }
}

bool Gate::is_clifford() const {
  switch (kind) {
    case GateKind::H:
    case GateKind::P:
    case GateKind::PDG:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::CNOT:
      return true;
    default:
      return false;
  }
}

CliffordOp Gate::clifford() const {
  switch (kind) {
    case GateKind::H: return {CliffordKind::H, qubits[0]};
    case GateKind::P: return {CliffordKind::P, qubits[0]};
    case GateKind::PDG: return {CliffordKind::PDG, qubits[0]};
    case GateKind::X: return {CliffordKind::X, qubits[0]};
    case GateKind::Y: return {CliffordKind::Y, qubits[0]};
    case GateKind::Z: return {CliffordKind::Z, qubits[0]};
    case GateKind::CNOT: return {CliffordKind::CNOT, qubits[0], qubits[1]};
    default:
      throw std::logic_error("gate is not a Clifford gate");
  }
}

Gate make_gate(GateKind kind, std::size_t q0, std::size_t q1, std::size_t q2,
               double angle) {
  Gate g{kind, {q0, 0, 0}, 0.0};
  const std::size_t a = gate_arity(kind);
  if (a > 1) g.qubits[1] = q1;
  if (a > 2) g.qubits[2] = q2;
  if (kind == GateKind::CRZ) g.angle = angle;
  return g;
}

void Circuit::validate() const {
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    const std::size_t a = g.arity();
    for (std::size_t k = 0; k < a; ++k) {
      if (g.qubits[k] >= num_qubits) {
        throw std::invalid_argument("gate " + std::to_string(i) +
                                    " uses qubit out of range");
      }
      for (std::size_t l = 0; l < k; ++l) {
        if (g.qubits[l] == g.qubits[k]) {
          throw std::invalid_argument("gate " + std::to_string(i) +
                                      " repeats a qubit");
        }
      }
    }
  }
}

ParseError::ParseError(Code code, std::size_t line, std::size_t column,
                       const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      code_(code),
      line_(line),
      column_(column) {}

double parse_angle(std::string_view text) {
  std::string s = lower(std::string(text));
  bool negative = false;
  std::string body = s;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  if (body.rfind("pi", 0) == 0) {
    double value = M_PI;
    const std::string rest = body.substr(2);
    if (!rest.empty()) {
      std::size_t k = 0;
      if (rest[0] != '/' || !parse_index(rest.substr(1), k) || k == 0) {
        throw std::invalid_argument("malformed angle '" + s + "'");
      }
      value = M_PI / static_cast<double>(k);
    }
    return negative ? -value : value;
  }
  double value = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() ||
      !std::isfinite(value)) {
    throw std::invalid_argument("malformed angle '" + s + "'");
  }
  return value;
}

std::string format_angle(double angle) {
  const double mag = std::fabs(angle);
  if (mag > 0.0) {
    const double k = std::round(M_PI / mag);
    if (k >= 1.0 && k <= 1e9 && M_PI / k == mag) {
      std::string s = angle < 0 ? "-pi" : "pi";
      if (k != 1.0) s += "/" + std::to_string(static_cast<long long>(k));
      return s;
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", angle);
  return buf;
}

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string word = lower(tokens[0].text);
    if (!have_header) {
      std::size_t n = 0;
      if (word != "qubits" || tokens.size() != 2 ||
          !parse_index(tokens[1].text, n)) {
        throw ParseError(ParseError::Code::Header, line_no, tokens[0].column,
                         "expected 'qubits <n>'");
      }
      c.num_qubits = n;
      have_header = true;
      continue;
    }
    const auto it = std::find_if(kGates.begin(), kGates.end(),
                                 [&](const GateInfo& g) { return g.name == word; });
    if (it == kGates.end()) {
      throw ParseError(ParseError::Code::UnknownGate, line_no, tokens[0].column,
                       "unknown gate '" + tokens[0].text + "'");
    }
    Gate g{it->kind, {0, 0, 0}, 0.0};
    const std::size_t arity = g.arity();
    const std::size_t expected = arity + (g.kind == GateKind::CRZ ? 2 : 1);
    if (tokens.size() != expected) {
      const std::size_t col = tokens.size() > expected
                                  ? tokens[expected].column
                                  : tokens.back().column;
      throw ParseError(ParseError::Code::Arity, line_no, col,
                       "'" + word + "' expects " + std::to_string(arity) +
                           " qubit(s)");
    }
    for (std::size_t k = 0; k < arity; ++k) {
      const Token& tok = tokens[k + 1];
      std::size_t q = 0;
      if (!parse_index(tok.text, q)) {
        throw ParseError(ParseError::Code::Token, line_no, tok.column,
                         "bad qubit index '" + tok.text + "'");
      }
      if (q >= c.num_qubits) {
        throw ParseError(ParseError::Code::QubitRange, line_no, tok.column,
                         "qubit " + tok.text + " out of range");
      }
      for (std::size_t l = 0; l < k; ++l) {
        if (g.qubits[l] == q) {
          throw ParseError(ParseError::Code::Arity, line_no, tok.column,
                           "qubit " + tok.text + " repeated");
        }
      }
      g.qubits[k] = q;
    }
    if (g.kind == GateKind::CRZ) {
      const Token& tok = tokens[3];
      try {
        g.angle = parse_angle(tok.text);
      } catch (const std::invalid_argument& e) {
        throw ParseError(ParseError::Code::Angle, line_no, tok.column, e.what());
      }
    }
    c.add(g);
    if (end == text.size()) break;
  }
  if (!have_header) {
    throw ParseError(ParseError::Code::Header, line_no, 1,
                     "missing 'qubits <n>' header");
  }
  return c;
}

std::string write_circuit(const Circuit& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.num_qubits << '\n';
  for (const Gate& g : circuit.gates) {
    out << gate_name(g.kind);
    for (std::size_t k = 0; k < g.arity(); ++k) out << ' ' << g.qubits[k];
    if (g.kind == GateKind::CRZ) out << ' ' << format_angle(g.angle);
    out << '\n';
  }
  return out.str();
}

std::size_t random_stabilizer_gate_count(std::size_t n, double beta) {
  const double nn = static_cast<double>(n);
  const double base = std::ceil(nn * std::log2(nn));
  return static_cast<std::size_t>(std::ceil(beta * base - 1e-9));
}

Circuit gen_random_stabilizer(std::size_t n, double beta,
                              std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("random stabilizer circuits need n >= 2");
  if (!(beta > 0)) throw std::invalid_argument("beta must be positive");
  Circuit c;
  c.num_qubits = n;
  const std::size_t count = random_stabilizer_gate_count(n, beta);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
  std::uniform_int_distribution<std::size_t> other(0, n - 2);
  for (std::size_t i = 0; i < count; ++i) {
    switch (kind(rng)) {
      case 0: {
        const std::size_t ctl = qubit(rng);
        std::size_t tgt = other(rng);
        if (tgt >= ctl) ++tgt;
        c.add(make_gate(GateKind::CNOT, ctl, tgt));
        break;
      }
      case 1:
        c.add(make_gate(GateKind::P, qubit(rng)));
        break;
      default:
        c.add(make_gate(GateKind::H, qubit(rng)));
    }
  }
  for (std::size_t q = 0; q < n; ++q) c.add(make_gate(GateKind::MEASURE, q));
  return c;
}

Circuit gen_random_stabilizer(std::size_t n, double beta, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return gen_random_stabilizer(n, beta, rng);
}

Circuit gen_cuccaro(std::size_t n) {
  if (n < 1) throw std::invalid_argument("adder width must be at least 1");
  const CuccaroLayout L{n};
  Circuit c;
  c.num_qubits = L.num_qubits();
  auto maj = [&c](std::size_t x, std::size_t y, std::size_t z) {
    c.add(make_gate(GateKind::CNOT, z, y));
    c.add(make_gate(GateKind::CNOT, z, x));
    c.add(make_gate(GateKind::TOF, x, y, z));
  };
  auto uma = [&c](std::size_t x, std::size_t y, std::size_t z) {
    c.add(make_gate(GateKind::TOF, x, y, z));
    c.add(make_gate(GateKind::CNOT, z, x));
    c.add(make_gate(GateKind::CNOT, x, y));
  };
  auto carry_in = [&L](std::size_t i) { return i == 0 ? L.ancilla() : L.a(i - 1); };
  for (std::size_t i = 0; i < n; ++i) maj(carry_in(i), L.b(i), L.a(i));
  c.add(make_gate(GateKind::CNOT, L.a(n - 1), L.carry()));
  for (std::size_t i = n; i-- > 0;) uma(carry_in(i), L.b(i), L.a(i));
  return c;
}

Circuit gen_qft(std::size_t n) {
  if (n < 1) throw std::invalid_argument("QFT needs at least one qubit");
  Circuit c;
  c.num_qubits = n;
  for (std::size_t j = 0; j < n; ++j) {
    c.add(make_gate(GateKind::H, j));
    for (std::size_t k = 1; j + k < n; ++k) {
      c.add(make_gate(GateKind::CRZ, j + k, j, 0,
                      M_PI / std::ldexp(1.0, static_cast<int>(k))));
    }
  }
  return c;
}

std::vector<Gate> toffoli_decomposed(std::size_t c1, std::size_t c2,
                                     std::size_t t) {
  if (c1 == c2 || c1 == t || c2 == t) {
    throw std::invalid_argument("Toffoli qubits must be distinct");
  }
  return {
      make_gate(GateKind::H, t),         make_gate(GateKind::CNOT, c2, t),
      make_gate(GateKind::TDG, t),       make_gate(GateKind::CNOT, c1, t),
      make_gate(GateKind::T, t),         make_gate(GateKind::CNOT, c2, t),
      make_gate(GateKind::TDG, t),       make_gate(GateKind::CNOT, c1, t),
      make_gate(GateKind::T, c2),        make_gate(GateKind::T, t),
      make_gate(GateKind::H, t),         make_gate(GateKind::CNOT, c1, c2),
      make_gate(GateKind::T, c1),        make_gate(GateKind::TDG, c2),
      make_gate(GateKind::CNOT, c1, c2),
  };
}

Circuit substitute_toffoli(const Circuit& circuit) {
  Circuit out;
  out.num_qubits = circuit.num_qubits;
  for (const Gate& g : circuit.gates) {
    if (g.kind != GateKind::TOF) {
      out.add(g);
      continue;
    }
    for (const Gate& d : toffoli_decomposed(g.qubits[0], g.qubits[1], g.qubits[2])) {
      out.add(d);
    }
  }
  return out;
}

}  // namespace framesim
