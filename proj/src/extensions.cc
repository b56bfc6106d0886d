// Copyright 2023 The Authors.
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

#include "mdepth/extensions.h"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace mdepth {

namespace {

std::vector<Mask> ClosureTable(const RankTable& m) {
  std::vector<Mask> cl(std::size_t{1} << m.size());
  for (Mask x = 0; x <= m.ground(); ++x) {
    cl[x] = Closure(m, x);
    if (x == m.ground()) break;
  }
  return cl;
}

// Rank of Z + new element for the extension given by cut membership of
// closures.
std::vector<std::uint8_t> CutIndicator(const RankTable& m,
                                       const std::vector<Mask>& members) {
  std::vector<std::uint8_t> in(std::size_t{1} << m.size(), 0);
  for (Mask f : members) in[f] = 1;
  return in;
}

RankTable CstarFromIndicator(const RankTable& m, const std::vector<Mask>& cl,
                             const std::vector<std::uint8_t>& in_cut) {
  const int base = in_cut[cl[0]] ? 0 : 1;
  return RankTable::FromFunction(m.size(), [&](Mask z) {
    return m.Rank(z) + (in_cut[cl[z]] ? 0 : 1) - base;
  });
}

}  // namespace

std::vector<Mask> Flats(const RankTable& m, const Caps& caps) {
  CheckCap(m.size() <= caps.flats_n, "flats ground set size");
  std::vector<Mask> out;
  for (Mask x = 0; x <= m.ground(); ++x) {
    if (Closure(m, x) == x) out.push_back(x);
    if (x == m.ground()) break;
  }
  return out;
}

std::vector<Mask> ModularCut::Minimal() const {
  std::vector<Mask> out;
  for (Mask f : members) {
    bool minimal = true;
    for (Mask g : members) {
      if (g != f && (g & f) == g) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(f);
  }
  return out;
}

std::optional<std::string> ValidateModularCut(const RankTable& m,
                                              const std::vector<Mask>& flats) {
  std::unordered_set<Mask> set(flats.begin(), flats.end());
  for (Mask f : flats) {
    if ((f & ~m.ground()) || !IsFlat(m, f)) {
      return "member " + std::to_string(f) + " is not a flat";
    }
  }
  for (Mask x = 0; x <= m.ground(); ++x) {
    if (IsFlat(m, x) && !set.count(x)) {
      for (Mask f : flats) {
        if ((f & x) == f) return "cut is not up-closed at " + std::to_string(x);
      }
    }
    if (x == m.ground()) break;
  }
  for (Mask f : flats) {
    for (Mask g : flats) {
      if (IsModularPair(m, f, g) && !set.count(f & g)) {
        return "cut is not closed under modular intersection";
      }
    }
  }
  return std::nullopt;
}

ModularCut CutFromMinimal(const RankTable& m, const std::vector<Mask>& minimal) {
  ModularCut cut;
  for (Mask x = 0; x <= m.ground(); ++x) {
    if (IsFlat(m, x)) {
      for (Mask f : minimal) {
        if ((f & x) == f) {
          cut.members.push_back(x);
          break;
        }
      }
    }
    if (x == m.ground()) break;
  }
  return cut;
}

std::vector<ModularCut> EnumerateModularCuts(const RankTable& m,
                                             const Caps& caps) {
  CheckCap(m.size() <= caps.cuts_n, "enumerate_modular_cuts ground set size");
  std::vector<Mask> flats = Flats(m, caps);
  CheckCap(flats.size() <= 64, "modular cut flat count");
  // Decreasing rank, so every proper superset of a flat precedes it.
  std::sort(flats.begin(), flats.end(), [&](Mask a, Mask b) {
    if (m.Rank(a) != m.Rank(b)) return m.Rank(a) > m.Rank(b);
    return a < b;
  });
  const int f = static_cast<int>(flats.size());
  std::vector<std::uint64_t> up(f, 0);
  std::vector<std::uint64_t> down(f, 0);
  std::vector<std::vector<std::uint64_t>> meet_up(f, std::vector<std::uint64_t>(f, 0));
  for (int i = 0; i < f; ++i) {
    for (int j = 0; j < f; ++j) {
      if ((flats[i] & flats[j]) == flats[i]) up[i] |= std::uint64_t{1} << j;
      if ((flats[i] & flats[j]) == flats[j]) down[i] |= std::uint64_t{1} << j;
    }
  }
  for (int i = 0; i < f; ++i) {
    for (int j = 0; j < f; ++j) {
      if (!IsModularPair(m, flats[i], flats[j])) continue;
      const Mask meet = flats[i] & flats[j];
      const int k = static_cast<int>(
          std::find(flats.begin(), flats.end(), meet) - flats.begin());
      meet_up[i][j] = up[k];
    }
  }
  std::vector<ModularCut> out;
  std::function<void(int, std::uint64_t, std::uint64_t, std::uint64_t)> dfs =
      [&](int pos, std::uint64_t in, std::uint64_t forced,
          std::uint64_t excluded) {
        if (pos == f) {
          ModularCut cut;
          for (int i = 0; i < f; ++i) {
            if ((in >> i) & 1) cut.members.push_back(flats[i]);
          }
          std::sort(cut.members.begin(), cut.members.end());
          out.push_back(std::move(cut));
          return;
        }
        const std::uint64_t bit = std::uint64_t{1} << pos;
        if (!(excluded & bit)) {
          std::uint64_t next_forced = forced;
          for (std::uint64_t rest = in | bit; rest != 0; rest &= rest - 1) {
            next_forced |= meet_up[pos][std::countr_zero(rest)];
          }
          if (!(next_forced & excluded)) {
            dfs(pos + 1, in | bit, next_forced, excluded);
          }
        }
        if (!(forced & bit)) {
          const std::uint64_t next_excluded = excluded | down[pos];
          if (!(forced & next_excluded)) {
            dfs(pos + 1, in, forced, next_excluded);
          }
        }
      };
  dfs(0, 0, 0, 0);
  return out;
}

ExtensionSpec ExtensionSpec::ByCut(std::vector<Mask> members) {
  ExtensionSpec s;
  s.kind = Kind::kByCut;
  s.cut = std::move(members);
  return s;
}

ExtensionSpec ExtensionSpec::Free() { return ExtensionSpec{}; }

ExtensionSpec ExtensionSpec::RelativelyFree(Mask x, Mask y) {
  ExtensionSpec s;
  s.kind = Kind::kRelativelyFree;
  s.x = x;
  s.y = y;
  return s;
}

OracleMatroid Extend(const RankTable& m, const ExtensionSpec& spec) {
  const int n = m.size();
  CheckCap(n + 1 <= kMaxGround, "extension ground set size");
  const Mask low = m.ground();
  const Mask e = Mask{1} << n;
  switch (spec.kind) {
    case ExtensionSpec::Kind::kFree: {
      const int r = m.FullRank();
      return OracleMatroid(n + 1, [m, low, e, r](Mask z) {
        const int base = m.Rank(z & low);
        if (!(z & e)) return base;
        return base == r ? base : base + 1;
      }, "free extension");
    }
    case ExtensionSpec::Kind::kRelativelyFree: {
      const Mask x = spec.x;
      const Mask y = spec.y;
      if ((x & y) || ((x | y) & ~low) || !IsConnectedBispan(m, x, y)) {
        throw InputError("relatively free extension needs a connected bispan");
      }
      return OracleMatroid(n + 1, [m, low, e, x, y](Mask z) {
        const Mask zl = z & low;
        const int base = m.Rank(zl);
        if (!(z & e)) return base;
        const bool modular =
            m.Rank(x | zl) + m.Rank(y | zl) ==
            m.Rank(x | y | zl) + m.Rank((x | zl) & (y | zl));
        return modular ? base : base + 1;
      }, "relatively free extension in (" + std::to_string(x) + "," +
                               std::to_string(y) + ")");
    }
    case ExtensionSpec::Kind::kByCut: {
      if (auto err = ValidateModularCut(m, spec.cut)) {
        throw InputError("invalid modular cut: " + *err);
      }
      auto cl = ClosureTable(m);
      auto in_cut = CutIndicator(m, spec.cut);
      return OracleMatroid(n + 1, [m, low, e, cl, in_cut](Mask z) {
        const Mask zl = z & low;
        const int base = m.Rank(zl);
        if (!(z & e)) return base;
        return in_cut[cl[zl]] ? base : base + 1;
      }, "extension by modular cut");
    }
  }
  throw InputError("unknown extension kind");
}

OracleMatroid Coextend(const RankTable& m, const ExtensionSpec& spec) {
  const RankTable ext = Extend(Dual(m), spec).Materialize();
  const RankTable co = Dual(ext);
  return OracleMatroid(co.size(), [co](Mask z) { return co.Rank(z); },
                       "coextension");
}

RankTable CstarByCut(const RankTable& m, const std::vector<Mask>& minimal) {
  const ModularCut cut = CutFromMinimal(m, minimal);
  return CstarFromIndicator(m, ClosureTable(m), CutIndicator(m, cut.members));
}

std::vector<Transformation> CstarTransformations(const RankTable& m,
                                                 const Caps& caps) {
  const auto cuts = EnumerateModularCuts(m, caps);
  const auto cl = ClosureTable(m);
  std::vector<Transformation> out;
  std::unordered_set<std::string> seen;
  for (const ModularCut& cut : cuts) {
    RankTable t = CstarFromIndicator(m, cl, CutIndicator(m, cut.members));
    if (seen.insert(t.Fingerprint()).second) {
      out.push_back({std::move(t), cut.Minimal()});
    }
  }
  return out;
}

std::vector<Transformation> DstarTransformations(const RankTable& m,
                                                 const Caps& caps) {
  std::vector<Transformation> out;
  for (auto& t : CstarTransformations(Dual(m), caps)) {
    out.push_back({Dual(t.result), std::move(t.cut_minimal)});
  }
  return out;
}

Json TraceToJson(const std::vector<TraceStep>& trace) {
  Json arr = Json::array();
  for (const TraceStep& s : trace) {
    Json j;
    if (s.op == TraceStep::Op::kRfext) {
      j["op"] = "rfext";
      j["X"] = s.x;
      j["Y"] = s.y;
    } else {
      j["op"] = "contract";
      j["elem"] = s.elem;
    }
    arr.push_back(j);
  }
  return arr;
}

std::vector<TraceStep> TraceFromJson(const Json& j) {
  std::vector<TraceStep> out;
  if (!j.is_array()) throw InputError("trace must be an array");
  for (const auto& s : j) {
    const std::string op = s.at("op");
    if (op == "rfext") {
      out.push_back({TraceStep::Op::kRfext, s.at("X").get<Mask>(),
                     s.at("Y").get<Mask>(), -1});
    } else if (op == "contract") {
      out.push_back({TraceStep::Op::kContract, 0, 0, s.at("elem").get<int>()});
    } else {
      throw InputError("unknown trace op " + op);
    }
  }
  return out;
}

RankTable GutsSplit(const RankTable& m, Mask a) {
  const Mask b = m.ground() & ~a;
  const int ra = m.Rank(a);
  const int rb = m.Rank(b);
  return RankTable::FromFunction(m.size(), [&](Mask x) {
    return m.Rank((x & b) | a) - ra + m.Rank((x & a) | b) - rb;
  });
}

GutsResult GutsContract(const RankTable& m, Mask a) {
  const Mask b = m.ground() & ~a;
  if (a == 0 || b == 0 || (a & ~m.ground())) {
    throw InputError("guts_contract needs a bipartition with nonempty sides");
  }
  GutsResult out{m, 0, {}};
  const int n = m.size();
  while (Lambda(out.result, a) > 0) {
    const RankTable ext =
        Extend(out.result, ExtensionSpec::RelativelyFree(a, b)).Materialize();
    out.result = Contract(ext, Mask{1} << n);
    out.trace.push_back({TraceStep::Op::kRfext, a, b, -1});
    out.trace.push_back({TraceStep::Op::kContract, 0, 0, n});
    ++out.steps;
  }
  return out;
}

}  // namespace mdepth
