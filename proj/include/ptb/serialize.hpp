#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "ptb/core.hpp"
#include "ptb/filling.hpp"
#include "ptb/tableau.hpp"

namespace ptb {

using ordered_json = nlohmann::ordered_json;

struct FormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Canonical tableau text format: a single object
//   {"n": 8, "diag_one": [4,7], "diag_zero": [6,8],
//    "cells": [{"row":-8,"col":8,"e":"0"}, ...]}
// with one record per box. Output lists cells in display order; input accepts
// any order. With raw = true, superfluous 1s are written as plain "1".
inline std::string serialize(const PermutationTableau& t, bool raw = false) {
  ordered_json j;
  const PartialFilling& f = raw ? decanonicalize(t.filling()) : t.filling();
  j["n"] = t.n();
  j["diag_one"] = label_list(t.labels().diag_one());
  j["diag_zero"] = label_list(t.labels().diag_zero());
  ordered_json cells = ordered_json::array();
  f.for_each_box([&](Box b, Entry e) {
    cells.push_back({{"row", b.row}, {"col", b.col}, {"e", std::string(1, entry_char(e))}});
  });
  j["cells"] = std::move(cells);
  return j.dump();
}

inline PermutationTableau deserialize(const std::string& text, Family fam = Family::B) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad json: ") + e.what());
  }
  try {
    int n = j.at("n").get<int>();
    auto one = j.at("diag_one").get<std::vector<int>>();
    auto zero = j.at("diag_zero").get<std::vector<int>>();
    LabelSets L = LabelSets::from_lists(n, one, zero);
    PartialFilling f(L, Entry::Empty);
    bool any_s = false;
    for (const auto& cell : j.at("cells")) {
      Box b{cell.at("row").get<int>(), cell.at("col").get<int>()};
      auto es = cell.at("e").get<std::string>();
      Entry e;
      if (es == "0")
        e = Entry::Zero;
      else if (es == "1")
        e = Entry::One;
      else if (es == "S")
        e = Entry::S;
      else
        throw FormatError("bad entry '" + es + "' at " + to_string(b));
      if (!f.is_box(b)) throw FormatError("not a box: " + to_string(b));
      any_s = any_s || e == Entry::S;
      if (f.is_diagonal(b)) {
        if (f.at(b) != e)
          throw FormatError("diagonal " + to_string(b) + " disagrees with the labeling sets");
      } else {
        if (f.at(b) != Entry::Empty) throw FormatError("duplicate cell " + to_string(b));
        f.set(b, e);
      }
    }
    int missing = f.count(Entry::Empty);
    if (missing > 0) throw FormatError(std::to_string(missing) + " box(es) missing from cells");
    // Raw 0/1 input gets canonicalized; input carrying S marks must already be
    // canonical (validate rejects a topmost S).
    return PermutationTableau::validate(any_s ? f : canonicalize(f), fam);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad tableau object: ") + e.what());
  }
}

}  // namespace ptb
