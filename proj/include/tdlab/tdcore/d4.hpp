/*
Copyright (C) 2026 The tdlab Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tdlab/tdcore/system.hpp"

namespace tdlab {

/// Element of the dihedral group of order 8 acting on tridiagonal systems.
///
/// Generators: '*' swaps the two halves of the system, the down arrow reverses
/// the second idempotent family and the double down arrow reverses the first.
/// Words act left to right. The element is stored in normal form: relative to the
/// original system, whether the halves are swapped and whether the E family and
/// the E* family are reversed.
class D4Element {
 public:
  static constexpr std::string_view kStar = "*";
  static constexpr std::string_view kDown = "\xE2\x86\x93";      // U+2193
  static constexpr std::string_view kDoubleDown = "\xE2\x87\x93";  // U+21D3

  D4Element() = default;

  static D4Element star() { return D4Element().then_star(); }
  static D4Element down() { return D4Element().then_down(); }
  static D4Element double_down() { return D4Element().then_double_down(); }

  /// Parses a word over '*', the arrows, or their ASCII spellings 'd' (down) and 'D' (double down).
  /// "" and "1" denote the identity.
  static D4Element parse(std::string_view word) {
    D4Element g;
    if (word == "1") return g;
    while (!word.empty()) {
      if (word.substr(0, kStar.size()) == kStar) {
        g = g.then_star();
        word.remove_prefix(kStar.size());
      } else if (word.substr(0, kDown.size()) == kDown) {
        g = g.then_down();
        word.remove_prefix(kDown.size());
      } else if (word.substr(0, kDoubleDown.size()) == kDoubleDown) {
        g = g.then_double_down();
        word.remove_prefix(kDoubleDown.size());
      } else if (word.front() == 'd') {
        g = g.then_down();
        word.remove_prefix(1);
      } else if (word.front() == 'D') {
        g = g.then_double_down();
        word.remove_prefix(1);
      } else {
        throw std::invalid_argument("D4 word: unexpected symbol in '" + std::string(word) + "'");
      }
    }
    return g;
  }

  /// The eight elements in the order of the relatives table.
  static std::array<D4Element, 8> all() {
    std::array<D4Element, 8> out{};
    std::size_t k = 0;
    for (bool swapped : {false, true})
      for (bool rev_e : {false, true})
        for (bool rev_estar : {false, true}) out[k++] = D4Element(swapped, rev_e, rev_estar);
    return out;
  }

  D4Element then_star() const { return D4Element(!swapped_, rev_e_, rev_estar_); }
  /// Reverses whichever family currently sits in the second slot.
  D4Element then_down() const {
    return swapped_ ? D4Element(swapped_, !rev_e_, rev_estar_) : D4Element(swapped_, rev_e_, !rev_estar_);
  }
  /// Reverses whichever family currently sits in the first slot.
  D4Element then_double_down() const {
    return swapped_ ? D4Element(swapped_, rev_e_, !rev_estar_) : D4Element(swapped_, !rev_e_, rev_estar_);
  }

  /// Composition: first this, then other.
  D4Element then(const D4Element& other) const {
    D4Element g = *this;
    for (char c : other.ascii_word()) {
      if (c == '*') g = g.then_star();
      else if (c == 'd') g = g.then_down();
      else g = g.then_double_down();
    }
    return g;
  }

  bool swapped() const { return swapped_; }
  bool reverses_e() const { return rev_e_; }
  bool reverses_estar() const { return rev_estar_; }

  /// Reduced word as in the relatives table ("1" for the identity).
  std::string word() const {
    std::string w;
    for (char c : ascii_word()) {
      if (c == '*') w += kStar;
      else if (c == 'd') w += kDown;
      else w += kDoubleDown;
    }
    return w.empty() ? "1" : w;
  }

  /// Same word with ASCII letters: 'd' = down, 'D' = double down.
  std::string ascii_word() const {
    std::string w;
    if (rev_estar_) w += 'd';
    if (rev_e_) w += 'D';
    if (swapped_) w += '*';
    return w;
  }

  friend bool operator==(const D4Element&, const D4Element&) = default;

 private:
  D4Element(bool swapped, bool rev_e, bool rev_estar) : swapped_(swapped), rev_e_(rev_e), rev_estar_(rev_estar) {}

  bool swapped_ = false;
  bool rev_e_ = false;
  bool rev_estar_ = false;
};

/// The relative of sys under g.
template <ExactField F>
TdSystem<F> d4_relative(const TdSystem<F>& sys, const D4Element& g) {
  auto rev = [](auto v, bool flip) {
    if (flip) std::reverse(v.begin(), v.end());
    return v;
  };
  auto e = rev(sys.E, g.reverses_e());
  auto theta = rev(sys.theta, g.reverses_e());
  auto estar = rev(sys.Estar, g.reverses_estar());
  auto thetastar = rev(sys.thetastar, g.reverses_estar());
  if (!g.swapped()) {
    auto rho = rev(sys.rho, g.reverses_estar());
    return TdSystem<F>{sys.field, sys.n, sys.d, sys.A, sys.Astar, theta, thetastar, e, estar, rho};
  }
  std::vector<std::size_t> rho;
  for (const auto& m : e) rho.push_back(rank(m));
  return TdSystem<F>{sys.field, sys.n, sys.d, sys.Astar, sys.A, thetastar, theta, estar, e, rho};
}

}  // namespace tdlab
