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

#include "mdepth/depth.h"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "mdepth/extensions.h"

namespace mdepth {

namespace {

constexpr int kInfinity = 1 << 20;

using Kind = WitnessStep::Kind;

bool AllowsContract(Measure mu) {
  return mu == Measure::kC || mu == Measure::kCD || mu == Measure::kCDStar;
}
bool AllowsDelete(Measure mu) {
  return mu == Measure::kD || mu == Measure::kCD || mu == Measure::kCStarD;
}
bool AllowsCStar(Measure mu) {
  return mu == Measure::kCStar || mu == Measure::kCStarD ||
         mu == Measure::kCStarDStar;
}
bool AllowsDStar(Measure mu) {
  return mu == Measure::kDStar || mu == Measure::kCDStar ||
         mu == Measure::kCStarDStar;
}
bool AllowsGuts(Measure mu) {
  return mu == Measure::kCStar || mu == Measure::kCStarD;
}

std::string Key(const RankTable& m, Measure mu, char tag) {
  std::string key;
  key.reserve(m.ranks().size() + 3);
  key.push_back(static_cast<char>(mu));
  key.push_back(tag);
  key += m.Fingerprint();
  return key;
}

// Sides A containing element 0 of all nontrivial bipartitions, ordered by
// (lambda(A), A).
std::vector<std::pair<int, Mask>> Bipartitions(const RankTable& m) {
  std::vector<std::pair<int, Mask>> out;
  const Mask full = m.ground();
  for (Mask rest = 0; rest < (full >> 1); ++rest) {
    const Mask a = (rest << 1) | 1u;
    out.push_back({Lambda(m, a), a});
  }
  std::sort(out.begin(), out.end());
  return out;
}

const char* KindName(Kind k) {
  switch (k) {
    case Kind::kBase: return "base";
    case Kind::kComponents: return "components";
    case Kind::kContract: return "contract";
    case Kind::kDelete: return "delete";
    case Kind::kGuts: return "guts";
    case Kind::kCStar: return "cstar";
    case Kind::kDStar: return "dstar";
    case Kind::kDual: return "dual";
  }
  return "base";
}

RankTable DstarByCut(const RankTable& m, const std::vector<Mask>& minimal) {
  return Dual(CstarByCut(Dual(m), minimal));
}

}  // namespace

const std::vector<Measure>& AllMeasures() {
  static const std::vector<Measure> all = {
      Measure::kC,      Measure::kD,      Measure::kCD,     Measure::kCStar,
      Measure::kDStar,  Measure::kCStarD, Measure::kCDStar, Measure::kCStarDStar};
  return all;
}

std::string MeasureName(Measure m) {
  switch (m) {
    case Measure::kC: return "C";
    case Measure::kD: return "D";
    case Measure::kCD: return "CD";
    case Measure::kCStar: return "CSTAR";
    case Measure::kDStar: return "DSTAR";
    case Measure::kCStarD: return "CSTAR_D";
    case Measure::kCDStar: return "C_DSTAR";
    case Measure::kCStarDStar: return "CSTAR_DSTAR";
  }
  return "?";
}

std::optional<Measure> ParseMeasure(const std::string& name) {
  for (Measure m : AllMeasures()) {
    if (MeasureName(m) == name) return m;
  }
  return std::nullopt;
}

Measure DualMeasure(Measure m) {
  switch (m) {
    case Measure::kC: return Measure::kD;
    case Measure::kD: return Measure::kC;
    case Measure::kCStar: return Measure::kDStar;
    case Measure::kDStar: return Measure::kCStar;
    case Measure::kCStarD: return Measure::kCDStar;
    case Measure::kCDStar: return Measure::kCStarD;
    default: return m;
  }
}

Json WitnessToJson(const WitnessStep& w) {
  Json j;
  j["step"] = KindName(w.kind);
  switch (w.kind) {
    case Kind::kContract:
    case Kind::kDelete:
      j["elem"] = w.elem;
      break;
    case Kind::kGuts:
      j["A"] = w.a;
      j["B"] = w.b;
      j["lambda"] = w.lambda;
      break;
    case Kind::kComponents:
      j["classes"] = w.classes;
      break;
    case Kind::kCStar:
    case Kind::kDStar:
      j["cut"] = w.cut;
      break;
    default:
      break;
  }
  if (!w.children.empty()) {
    Json kids = Json::array();
    for (const auto& c : w.children) kids.push_back(WitnessToJson(c));
    j["children"] = kids;
  }
  return j;
}

WitnessStep WitnessFromJson(const Json& j) {
  WitnessStep w;
  try {
    const std::string step = j.at("step");
    bool found = false;
    for (Kind k : {Kind::kBase, Kind::kComponents, Kind::kContract, Kind::kDelete,
                   Kind::kGuts, Kind::kCStar, Kind::kDStar, Kind::kDual}) {
      if (step == KindName(k)) {
        w.kind = k;
        found = true;
      }
    }
    if (!found) throw InputError("unknown witness step " + step);
    if (j.contains("elem")) w.elem = j["elem"].get<int>();
    if (j.contains("A")) w.a = j["A"].get<Mask>();
    if (j.contains("B")) w.b = j["B"].get<Mask>();
    if (j.contains("lambda")) w.lambda = j["lambda"].get<int>();
    if (j.contains("classes")) w.classes = j["classes"].get<std::vector<Mask>>();
    if (j.contains("cut")) w.cut = j["cut"].get<std::vector<Mask>>();
    if (j.contains("children")) {
      for (const auto& c : j["children"]) w.children.push_back(WitnessFromJson(c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("witness JSON: ") + e.what());
  }
  return w;
}

Json DepthResultToJson(const DepthResult& r, bool with_timing) {
  Json j;
  j["measure"] = MeasureName(r.measure);
  j["value"] = r.value;
  j["witness"] = WitnessToJson(r.witness);
  Json stats;
  stats["nodes"] = r.stats.nodes;
  stats["cache_hits"] = r.stats.cache_hits;
  stats["wall_ms"] = with_timing ? r.stats.wall_ms : 0.0;
  j["stats"] = stats;
  return j;
}

DepthSolver::DepthSolver(Caps caps) : caps_(caps) {}

DepthStats DepthSolver::stats() const {
  return {nodes_.load(), hits_.load(), 0.0};
}

void DepthSolver::CheckMeasureCap(const RankTable& m, Measure mu,
                                  bool brute) const {
  const int n = m.size();
  const std::string name = MeasureName(mu);
  if (brute) {
    CheckCap(n <= caps_.brute_n, "brute_depth ground set size (" + name + ")");
    return;
  }
  switch (mu) {
    case Measure::kCD:
      CheckCap(n <= caps_.depth_cd_n, "depth ground set size (" + name + ")");
      break;
    case Measure::kC:
    case Measure::kD:
      CheckCap(n <= caps_.depth_c_d_n, "depth ground set size (" + name + ")");
      break;
    case Measure::kCStarDStar:
      CheckCap(n <= caps_.depth_csdsd_n, "depth ground set size (" + name + ")");
      break;
    default:
      CheckCap(n <= caps_.depth_cstar_n, "depth ground set size (" + name + ")");
      break;
  }
}

std::optional<DepthSolver::Entry> DepthSolver::Lookup(const std::string& key) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = exact_.find(key);
  if (it == exact_.end()) return std::nullopt;
  ++hits_;
  return it->second;
}

void DepthSolver::Store(const std::string& key, const Entry& e) {
  std::lock_guard<std::mutex> lock(mu_);
  exact_.emplace(key, e);
}

int DepthSolver::Value(const RankTable& m, Measure mu) {
  CheckMeasureCap(m, mu, false);
  return Solve(m, mu).value;
}

DepthResult DepthSolver::Depth(const RankTable& m, Measure mu) {
  CheckMeasureCap(m, mu, false);
  const auto start = std::chrono::steady_clock::now();
  const std::int64_t nodes0 = nodes_.load();
  const std::int64_t hits0 = hits_.load();
  DepthResult r;
  r.measure = mu;
  r.value = Solve(m, mu).value;
  r.witness = BuildWitness(m, mu);
  r.stats.nodes = nodes_.load() - nodes0;
  r.stats.cache_hits = hits_.load() - hits0;
  r.stats.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return r;
}

DepthSolver::Entry DepthSolver::Solve(const RankTable& m, Measure mu) {
  if (m.size() <= 1) return {1, {}};
  const std::string key = Key(m, mu, 'x');
  if (auto hit = Lookup(key)) return *hit;
  ++nodes_;
  Entry e;
  if (mu == Measure::kDStar || mu == Measure::kCDStar) {
    e.value = Solve(Dual(m), DualMeasure(mu)).value;
    e.choice.kind = Kind::kDual;
  } else if (mu == Measure::kCStarDStar) {
    e.value = BruteSolve(m, mu);
  } else {
    const auto comps = Components(m);
    if (comps.size() > 1) {
      e.choice.kind = Kind::kComponents;
      for (Mask c : comps) e.value = std::max(e.value, Solve(Restrict(m, c), mu).value);
    } else if (mu == Measure::kCStar) {
      e = SolveCstar(m);
    } else if (mu == Measure::kCStarD) {
      e = SolveGd(m);
    } else {
      e = SolveDirect(m, mu);
    }
  }
  Store(key, e);
  return e;
}

DepthSolver::Entry DepthSolver::SolveDirect(const RankTable& m, Measure mu) {
  Entry best{kInfinity, {}};
  for (int el = 0; el < m.size(); ++el) {
    const Mask bit = Mask{1} << el;
    if (AllowsContract(mu)) {
      const int v = 1 + Solve(Contract(m, bit), mu).value;
      if (v < best.value) best = {v, {Kind::kContract, el, 0}};
    }
    if (AllowsDelete(mu)) {
      const int v = 1 + Solve(Delete(m, bit), mu).value;
      if (v < best.value) best = {v, {Kind::kDelete, el, 0}};
    }
    if (best.value == 2) break;  // a connected matroid on >= 2 elements
  }
  return best;
}

// csd(M) = min over (A, B) of lambda(A) + max(csd(M/A), csd(M/B)).
DepthSolver::Entry DepthSolver::SolveCstar(const RankTable& m) {
  Entry best{kInfinity, {}};
  for (const auto& [lam, a] : Bipartitions(m)) {
    if (lam + 1 >= best.value) break;
    const Mask b = m.ground() & ~a;
    const int va = Solve(ContractRestrict(m, a, b), Measure::kCStar).value;
    if (lam + va >= best.value) continue;
    const int vb = Solve(ContractRestrict(m, b, a), Measure::kCStar).value;
    const int v = lam + std::max(va, vb);
    if (v < best.value) best = {v, {Kind::kGuts, -1, a}};
  }
  return best;
}

// gd-depth: guts splits as above, or 1 + gd(M \ e).
DepthSolver::Entry DepthSolver::SolveGd(const RankTable& m) {
  Entry best{kInfinity, {}};
  for (const auto& [lam, a] : Bipartitions(m)) {
    if (lam + 1 >= best.value) break;
    const Mask b = m.ground() & ~a;
    const int va = Solve(ContractRestrict(m, a, b), Measure::kCStarD).value;
    if (lam + va >= best.value) continue;
    const int vb = Solve(ContractRestrict(m, b, a), Measure::kCStarD).value;
    const int v = lam + std::max(va, vb);
    if (v < best.value) best = {v, {Kind::kGuts, -1, a}};
  }
  if (best.value > 2) {
    for (int el = 0; el < m.size(); ++el) {
      const int v = 1 + Solve(Delete(m, Mask{1} << el), Measure::kCStarD).value;
      if (v < best.value) best = {v, {Kind::kDelete, el, 0}};
    }
  }
  return best;
}

std::vector<Mask> DepthSolver::CstarOptimalBipartitions(const RankTable& m) {
  CheckMeasureCap(m, Measure::kCStar, false);
  std::vector<Mask> out;
  if (m.size() <= 1) return out;
  const int target = Solve(m, Measure::kCStar).value;
  for (const auto& [lam, a] : Bipartitions(m)) {
    if (lam >= target) break;
    const Mask b = m.ground() & ~a;
    const int v = lam + std::max(Solve(ContractRestrict(m, a, b), Measure::kCStar).value,
                                 Solve(ContractRestrict(m, b, a), Measure::kCStar).value);
    if (v == target) out.push_back(a);
  }
  return out;
}

WitnessStep DepthSolver::BuildWitness(const RankTable& m, Measure mu) {
  WitnessStep w;
  if (m.size() <= 1) return w;
  if (mu == Measure::kCStarDStar) {
    return WitnessAtMost(m, mu, Solve(m, mu).value);
  }
  const Entry e = Solve(m, mu);
  w.kind = e.choice.kind;
  switch (e.choice.kind) {
    case Kind::kComponents:
      w.classes = Components(m);
      for (Mask c : w.classes) w.children.push_back(BuildWitness(Restrict(m, c), mu));
      break;
    case Kind::kContract:
      w.elem = e.choice.elem;
      w.children.push_back(BuildWitness(Contract(m, Mask{1} << w.elem), mu));
      break;
    case Kind::kDelete:
      w.elem = e.choice.elem;
      w.children.push_back(BuildWitness(Delete(m, Mask{1} << w.elem), mu));
      break;
    case Kind::kGuts:
      w.a = e.choice.a;
      w.b = m.ground() & ~w.a;
      w.lambda = Lambda(m, w.a);
      w.children.push_back(BuildWitness(ContractRestrict(m, w.a, w.b), mu));
      w.children.push_back(BuildWitness(ContractRestrict(m, w.b, w.a), mu));
      break;
    case Kind::kDual:
      w.children.push_back(BuildWitness(Dual(m), DualMeasure(mu)));
      break;
    default:
      break;
  }
  return w;
}

// Least fixed point of the literal recursion, decided for one bound k at a
// time so that cycles among same-size transformations terminate.
bool DepthSolver::AtMost(const RankTable& m, Measure mu, int k) {
  if (k <= 0) return false;
  if (m.size() <= 1) return true;
  const std::string key = Key(m, mu, 'b');
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = bounds_.find(key);
    if (it != bounds_.end()) {
      if (k >= it->second.proven_true) {
        ++hits_;
        return true;
      }
      if (k <= it->second.proven_false) {
        ++hits_;
        return false;
      }
    }
  }
  ++nodes_;
  bool result = false;
  const auto comps = Components(m);
  if (comps.size() > 1) {
    result = true;
    for (Mask c : comps) {
      if (!AtMost(Restrict(m, c), mu, k)) {
        result = false;
        break;
      }
    }
  } else if (k >= 2) {
    const std::string self = m.Fingerprint();
    auto try_move = [&](const RankTable& next) {
      return next.Fingerprint() != self && AtMost(next, mu, k - 1);
    };
    for (int el = 0; el < m.size() && !result && AllowsContract(mu); ++el) {
      result = try_move(Contract(m, Mask{1} << el));
    }
    for (int el = 0; el < m.size() && !result && AllowsDelete(mu); ++el) {
      result = try_move(Delete(m, Mask{1} << el));
    }
    if (!result && AllowsCStar(mu)) {
      for (const auto& t : CstarTransformations(m, caps_)) {
        if ((result = try_move(t.result))) break;
      }
    }
    if (!result && AllowsDStar(mu)) {
      for (const auto& t : DstarTransformations(m, caps_)) {
        if ((result = try_move(t.result))) break;
      }
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  Bounds& b = bounds_[key];
  if (result) {
    b.proven_true = std::min(b.proven_true, k);
  } else {
    b.proven_false = std::max(b.proven_false, k);
  }
  return result;
}

WitnessStep DepthSolver::WitnessAtMost(const RankTable& m, Measure mu, int k) {
  WitnessStep w;
  if (m.size() <= 1) return w;
  const auto comps = Components(m);
  if (comps.size() > 1) {
    w.kind = Kind::kComponents;
    w.classes = comps;
    for (Mask c : comps) w.children.push_back(WitnessAtMost(Restrict(m, c), mu, k));
    return w;
  }
  const std::string self = m.Fingerprint();
  auto good = [&](const RankTable& next) {
    return next.Fingerprint() != self && AtMost(next, mu, k - 1);
  };
  for (int el = 0; el < m.size() && AllowsContract(mu); ++el) {
    RankTable next = Contract(m, Mask{1} << el);
    if (good(next)) {
      w.kind = Kind::kContract;
      w.elem = el;
      w.children.push_back(WitnessAtMost(next, mu, k - 1));
      return w;
    }
  }
  for (int el = 0; el < m.size() && AllowsDelete(mu); ++el) {
    RankTable next = Delete(m, Mask{1} << el);
    if (good(next)) {
      w.kind = Kind::kDelete;
      w.elem = el;
      w.children.push_back(WitnessAtMost(next, mu, k - 1));
      return w;
    }
  }
  if (AllowsCStar(mu)) {
    for (const auto& t : CstarTransformations(m, caps_)) {
      if (good(t.result)) {
        w.kind = Kind::kCStar;
        w.cut = t.cut_minimal;
        w.children.push_back(WitnessAtMost(t.result, mu, k - 1));
        return w;
      }
    }
  }
  if (AllowsDStar(mu)) {
    for (const auto& t : DstarTransformations(m, caps_)) {
      if (good(t.result)) {
        w.kind = Kind::kDStar;
        w.cut = t.cut_minimal;
        w.children.push_back(WitnessAtMost(t.result, mu, k - 1));
        return w;
      }
    }
  }
  throw std::logic_error("no witness for a proven bound");
}

int DepthSolver::BruteSolve(const RankTable& m, Measure mu) {
  int k = 1;
  while (!AtMost(m, mu, k)) ++k;
  return k;
}

int DepthSolver::BruteValue(const RankTable& m, Measure mu) {
  CheckMeasureCap(m, mu, true);
  if (AllowsCStar(mu) || AllowsDStar(mu)) {
    CheckCap(m.size() <= caps_.cuts_n, "brute_depth modular cut enumeration");
  }
  return BruteSolve(m, mu);
}

int ReplayWitness(const RankTable& m, Measure mu, const WitnessStep& w,
                  const Caps& caps) {
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw InputError("witness replay: " + what);
  };
  auto one_child = [&] { need(w.children.size() == 1, "expected one child"); };
  const int n = m.size();
  switch (w.kind) {
    case Kind::kBase:
      need(n <= 1, "base step on more than one element");
      return 1;
    case Kind::kComponents: {
      need(w.classes == Components(m), "classes are not the components");
      need(w.children.size() == w.classes.size(), "child count");
      int v = 1;
      for (std::size_t i = 0; i < w.classes.size(); ++i) {
        v = std::max(v, ReplayWitness(Restrict(m, w.classes[i]), mu, w.children[i], caps));
      }
      return v;
    }
    case Kind::kContract:
    case Kind::kDelete: {
      const bool contract = w.kind == Kind::kContract;
      need(contract ? AllowsContract(mu) : AllowsDelete(mu),
           std::string(KindName(w.kind)) + " not allowed for " + MeasureName(mu));
      need(n >= 2 && IsConnected(m), "step on a disconnected matroid");
      need(w.elem >= 0 && w.elem < n, "element out of range");
      one_child();
      const Mask bit = Mask{1} << w.elem;
      return 1 + ReplayWitness(contract ? Contract(m, bit) : Delete(m, bit), mu,
                               w.children[0], caps);
    }
    case Kind::kGuts: {
      need(AllowsGuts(mu), "guts step not allowed for " + MeasureName(mu));
      need(w.a != 0 && (w.a & ~m.ground()) == 0 && w.b == (m.ground() & ~w.a) &&
               w.b != 0,
           "not a bipartition");
      need(w.lambda == Lambda(m, w.a), "lambda mismatch");
      need(w.children.size() == 2, "expected two children");
      const GutsResult g = GutsContract(m, w.a);
      need(g.steps == w.lambda && g.result == GutsSplit(m, w.a),
           "guts contraction does not reach the split");
      const int va = ReplayWitness(ContractRestrict(m, w.a, w.b), mu, w.children[0], caps);
      const int vb = ReplayWitness(ContractRestrict(m, w.b, w.a), mu, w.children[1], caps);
      return w.lambda + std::max(va, vb);
    }
    case Kind::kCStar:
    case Kind::kDStar: {
      const bool cstar = w.kind == Kind::kCStar;
      need(cstar ? AllowsCStar(mu) : AllowsDStar(mu),
           std::string(KindName(w.kind)) + " not allowed for " + MeasureName(mu));
      need(n >= 2 && IsConnected(m), "step on a disconnected matroid");
      one_child();
      const RankTable base = cstar ? m : Dual(m);
      const ModularCut cut = CutFromMinimal(base, w.cut);
      if (auto err = ValidateModularCut(base, cut.members)) need(false, *err);
      const RankTable next = cstar ? CstarByCut(m, w.cut) : DstarByCut(m, w.cut);
      return 1 + ReplayWitness(next, mu, w.children[0], caps);
    }
    case Kind::kDual:
      one_child();
      return ReplayWitness(Dual(m), DualMeasure(mu), w.children[0], caps);
  }
  throw InputError("witness replay: unknown step");
}

namespace {

bool Log2Below(int u, int d) {
  // log2(u) <= d  <=>  u <= 2^d
  return d >= 30 || static_cast<std::int64_t>(u) <= (std::int64_t{1} << d);
}

}  // namespace

std::vector<BoundCheck> CircumferenceBoundsCheck(DepthSolver& solver,
                                                 const RankTable& m) {
  const int u = Circumference(m);
  const int us = Cocircumference(m);
  std::vector<BoundCheck> out;
  auto value = [&](Measure mu) -> std::optional<int> {
    try {
      return solver.Value(m, mu);
    } catch (const CapError&) {
      return std::nullopt;
    }
  };
  auto add = [&](const std::string& name, std::optional<int> d, auto pred,
                 int circ) {
    BoundCheck c;
    c.name = name;
    if (!d) {
      c.skipped = true;
      c.pass = true;
      c.detail = "cap";
    } else {
      c.pass = pred(*d);
      c.detail = "depth=" + std::to_string(*d) + " u=" + std::to_string(circ);
    }
    out.push_back(c);
  };
  const auto dd = value(Measure::kD);
  const auto cd = value(Measure::kC);
  const auto csd = value(Measure::kCStar);
  add("log2(u*) <= dd", dd, [&](int d) { return Log2Below(us, d); }, us);
  add("dd <= u*(u*+1)/2", dd, [&](int d) { return d <= us * (us + 1) / 2; }, us);
  add("log2(u) <= cd", cd, [&](int d) { return Log2Below(u, d); }, u);
  add("cd <= u(u+1)/2", cd, [&](int d) { return d <= u * (u + 1) / 2; }, u);
  add("log2(u) <= csd", csd, [&](int d) { return Log2Below(u, d); }, u);
  add("csd <= u^2+1", csd, [&](int d) { return d <= u * u + 1; }, u);
  return out;
}

std::vector<BoundCheck> ChainCheck(DepthSolver& solver, const RankTable& m) {
  std::vector<BoundCheck> out;
  auto value = [&](Measure mu) -> std::optional<int> {
    try {
      return solver.Value(m, mu);
    } catch (const CapError&) {
      return std::nullopt;
    }
  };
  auto add = [&](Measure lo, Measure hi) {
    BoundCheck c;
    c.name = MeasureName(lo) + " <= " + MeasureName(hi);
    const auto a = value(lo);
    const auto b = value(hi);
    if (!a || !b) {
      c.skipped = true;
      c.pass = true;
      c.detail = "cap";
    } else {
      c.pass = *a <= *b;
      c.detail = std::to_string(*a) + " vs " + std::to_string(*b);
    }
    out.push_back(c);
  };
  add(Measure::kCStarDStar, Measure::kCStarD);
  add(Measure::kCStarD, Measure::kCD);
  add(Measure::kCStarDStar, Measure::kCDStar);
  add(Measure::kCDStar, Measure::kCD);
  add(Measure::kCStar, Measure::kC);
  add(Measure::kDStar, Measure::kD);
  add(Measure::kCStarDStar, Measure::kCD);
  return out;
}

}  // namespace mdepth
