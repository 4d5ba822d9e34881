// Copyright 2026 The qroute authors
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

#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qroute/common.hpp"
#include "qroute/core.hpp"

// OpenQASM 2.0 subset: one quantum register, built-in gate names (no
// qelib1.inc expansion), `barrier` ignored, `measure` kept as terminal
// markers. Angles accept `pi` arithmetic and plain numeric literals.
namespace qroute::qasm {

struct SyntaxError : Error {
  int line, col;
  SyntaxError(int line, int col, const std::string& msg)
      : Error("SyntaxError at " + std::to_string(line) + ":" +
              std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
};

struct UnsupportedGate : Error {
  explicit UnsupportedGate(const std::string& name)
      : Error("UnsupportedGate: " + name) {}
};

struct UndeclaredRegister : Error {
  explicit UndeclaredRegister(const std::string& name)
      : Error("UndeclaredRegister: " + name) {}
};

namespace detail {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1, col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }

  char get() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        get();
      } else if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
        while (!eof() && peek() != '\n') get();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(line, col, msg);
  }

  std::string ident() {
    skip_ws();
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
      fail("expected identifier");
    std::string s;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
      s += get();
    return s;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      get();
      return true;
    }
    return false;
  }

  long integer() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      v = v * 10 + (get() - '0');
    return v;
  }

  double number() {
    skip_ws();
    std::size_t start = pos;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')
      get();
    if (peek() == 'e' || peek() == 'E') {
      get();
      if (peek() == '+' || peek() == '-') get();
      while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    }
    if (pos == start) fail("expected number");
    return std::stod(text.substr(start, pos - start));
  }
};

// expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)* ;
// factor := '-' factor | '(' expr ')' | 'pi' | number
inline double parse_expr(Cursor& c);

inline double parse_factor(Cursor& c) {
  c.skip_ws();
  if (c.accept('-')) return -parse_factor(c);
  if (c.accept('+')) return parse_factor(c);
  if (c.accept('(')) {
    double v = parse_expr(c);
    c.expect(')');
    return v;
  }
  if (std::isalpha(static_cast<unsigned char>(c.peek()))) {
    std::string id = c.ident();
    if (id == "pi") return kPi;
    c.fail("unknown symbol '" + id + "' in angle");
  }
  return c.number();
}

inline double parse_term(Cursor& c) {
  double v = parse_factor(c);
  while (true) {
    c.skip_ws();
    if (c.accept('*')) v *= parse_factor(c);
    else if (c.accept('/')) v /= parse_factor(c);
    else return v;
  }
}

inline double parse_expr(Cursor& c) {
  double v = parse_term(c);
  while (true) {
    c.skip_ws();
    if (c.accept('+')) v += parse_term(c);
    else if (c.peek() == '-') {
      c.get();
      v -= parse_term(c);
    } else {
      return v;
    }
  }
}

inline const std::map<std::string, GateKind>& gate_table() {
  static const std::map<std::string, GateKind> table = {
      {"x", GateKind::X},       {"z", GateKind::Z},
      {"h", GateKind::H},       {"s", GateKind::S},
      {"sdg", GateKind::Sdg},   {"t", GateKind::T},
      {"tdg", GateKind::Tdg},   {"sx", GateKind::SX},
      {"sxdg", GateKind::SXdg}, {"rz", GateKind::RZ},
      {"rx", GateKind::RX},     {"u3", GateKind::U3},
      {"cx", GateKind::CX},     {"swap", GateKind::SWAP},
      {"ccx", GateKind::CCX},   {"cswap", GateKind::CSWAP},
  };
  return table;
}

}  // namespace detail

inline Circuit parse_qasm(const std::string& text) {
  detail::Cursor c{text};

  c.skip_ws();
  std::string kw = c.ident();
  if (kw != "OPENQASM") c.fail("expected OPENQASM header");
  c.skip_ws();
  double version = c.number();
  if (std::abs(version - 2.0) > 1e-9) c.fail("only OPENQASM 2.0 supported");
  c.expect(';');

  std::string qreg_name;
  std::string creg_name;
  int num_qubits = -1;
  std::optional<Circuit> circ;

  auto qubit_ref = [&](detail::Cursor& cur) {
    cur.skip_ws();
    int at_line = cur.line, at_col = cur.col;
    std::string reg = cur.ident();
    if (reg != qreg_name) throw UndeclaredRegister(reg);
    cur.expect('[');
    long idx = cur.integer();
    cur.expect(']');
    if (idx < 0 || idx >= num_qubits)
      throw SyntaxError(at_line, at_col,
                        "qubit index " + std::to_string(idx) +
                            " out of range for " + reg + "[" +
                            std::to_string(num_qubits) + "]");
    return static_cast<int>(idx);
  };

  while (true) {
    c.skip_ws();
    if (c.eof()) break;
    int stmt_line = c.line, stmt_col = c.col;
    std::string id = c.ident();

    if (id == "include") {
      // Tolerated but never expanded; gate names are built in.
      c.skip_ws();
      c.expect('"');
      while (!c.eof() && c.peek() != '"') c.get();
      c.expect('"');
      c.expect(';');
      continue;
    }
    if (id == "qreg") {
      if (num_qubits >= 0)
        throw SyntaxError(stmt_line, stmt_col, "multiple qreg declarations");
      qreg_name = c.ident();
      c.expect('[');
      num_qubits = static_cast<int>(c.integer());
      c.expect(']');
      c.expect(';');
      circ.emplace(num_qubits);
      continue;
    }
    if (id == "creg") {
      creg_name = c.ident();
      c.expect('[');
      c.integer();
      c.expect(']');
      c.expect(';');
      continue;
    }
    if (num_qubits < 0)
      throw SyntaxError(stmt_line, stmt_col, "statement before qreg");
    if (id == "barrier") {
      while (!c.eof() && c.peek() != ';') c.get();
      c.expect(';');
      continue;
    }
    if (id == "measure") {
      int q = qubit_ref(c);
      c.skip_ws();
      if (c.accept('-')) {
        c.expect('>');
        std::string reg = c.ident();
        if (!creg_name.empty() && reg != creg_name)
          throw UndeclaredRegister(reg);
        c.expect('[');
        c.integer();
        c.expect(']');
      }
      c.expect(';');
      circ->add_measurement(q);
      continue;
    }

    auto it = detail::gate_table().find(id);
    if (it == detail::gate_table().end()) throw UnsupportedGate(id);
    GateKind kind = it->second;

    Gate g{kind};
    int np = gate_num_params(kind);
    if (np > 0) {
      c.expect('(');
      for (int i = 0; i < np; ++i) {
        g.params[i] = detail::parse_expr(c);
        if (i + 1 < np) c.expect(',');
      }
      c.expect(')');
    }
    for (int i = 0; i < gate_arity(kind); ++i) {
      g.qubits[i] = qubit_ref(c);
      if (i + 1 < gate_arity(kind)) c.expect(',');
    }
    c.expect(';');
    try {
      circ->push(g);
    } catch (const Error& e) {
      throw SyntaxError(stmt_line, stmt_col, e.what());
    }
  }
  if (!circ) throw SyntaxError(1, 1, "no qreg declaration");
  return *circ;
}

// Prints an angle as an exact multiple of pi when one exists with a small
// denominator, else with 17 significant digits.
inline std::string format_angle(double theta) {
  for (int den = 1; den <= 64; ++den) {
    double scaled = theta * den / kPi;
    double rounded = std::round(scaled);
    if (rounded == 0.0 && den == 1 && std::abs(theta) > 0) continue;
    if (std::abs(scaled - rounded) < 1e-12 * den) {
      long num = static_cast<long>(rounded);
      if (num == 0) return "0";
      std::string s;
      if (num == -1) s = "-pi";
      else if (num == 1) s = "pi";
      else s = std::to_string(num) + "*pi";
      if (den > 1) s += "/" + std::to_string(den);
      return s;
    }
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", theta);
  return buf;
}

inline std::string emit_qasm(const Circuit& c) {
  std::string out = "OPENQASM 2.0;\n";
  out += "qreg q[" + std::to_string(c.num_qubits()) + "];\n";
  if (!c.measurements().empty())
    out += "creg c[" + std::to_string(c.measurements().size()) + "];\n";
  for (const Gate& g : c.gates()) {
    out += gate_name(g.kind);
    int np = gate_num_params(g.kind);
    if (np > 0) {
      out += "(";
      for (int i = 0; i < np; ++i) {
        if (i) out += ",";
        out += format_angle(g.params[i]);
      }
      out += ")";
    }
    out += " ";
    for (int i = 0; i < g.arity(); ++i) {
      if (i) out += ",";
      out += "q[" + std::to_string(g.qubits[i]) + "]";
    }
    out += ";\n";
  }
  for (std::size_t i = 0; i < c.measurements().size(); ++i)
    out += "measure q[" + std::to_string(c.measurements()[i]) + "] -> c[" +
           std::to_string(i) + "];\n";
  return out;
}

}  // namespace qroute::qasm
