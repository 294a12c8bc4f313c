#include "logdiv/resolve.hpp"

#include "json.hpp"
#include "logdiv/error.hpp"
#include "logdiv/groebner.hpp"

namespace logdiv {

namespace {

std::vector<ModuleElement> nonzero(std::vector<ModuleElement> v) {
  std::erase_if(v, [](const ModuleElement& e) { return e.is_zero(); });
  return v;
}


ModuleElement rebuild(const FreeModulePtr& f, const ModuleElement& e, int drop) {
  std::vector<Polynomial> c;
  for (int k = 0; k < e.rank(); ++k)
    if (k != drop) c.push_back(e[k]);
  return ModuleElement(f, std::move(c));
}

FreeModulePtr without(const FreeModulePtr& f, int drop) {
  std::vector<long> s;
  for (int k = 0; k < f->rank(); ++k)
    if (k != drop) s.push_back(f->shift(k));
  return FreeModule::make(f->ring(), f->rank() - 1, s, f->order());
}

// first unit entry (k, c) of maps[i], or (-1, -1)
std::pair<int, int> find_unit(const std::vector<ModuleElement>& m) {
  for (int c = 0; c < static_cast<int>(m.size()); ++c) {
    const auto& e = m[static_cast<std::size_t>(c)];
    for (int k = 0; k < e.rank(); ++k)
      if (!e[k].is_zero() && e[k].is_constant()) return {k, c};
  }
  return {-1, -1};
}

void cancel(GradedResolution& r, std::size_t i, int k, int c) {
  auto& cols = r.maps[i];
  const ModuleElement pivot = cols[static_cast<std::size_t>(c)];
  const Rational u = pivot[k].lead_coeff();
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    if (j == c) continue;
    auto& e = cols[static_cast<std::size_t>(j)];
    if (e[k].is_zero()) continue;
    e -= (e[k] * u.inverse()) * pivot;
  }
  cols.erase(cols.begin() + c);
  r.modules[i] = without(r.modules[i], k);
  r.modules[i + 1] = without(r.modules[i + 1], c);
  for (auto& e : cols) e = rebuild(r.modules[i], e, k);
  if (i > 0) {
    auto& prev = r.maps[i - 1];
    prev.erase(prev.begin() + k);
  }
  if (i + 1 < r.maps.size())
    for (auto& e : r.maps[i + 1]) e = rebuild(r.modules[i + 1], e, c);
}

}  // namespace

std::vector<FreeModulePtr> GradedResolution::free_modules() const {
  std::vector<FreeModulePtr> out(modules.begin() + (kind == Resolved::Submodule ? 1 : 0), modules.end());
  while (!out.empty() && out.back()->rank() == 0) out.pop_back();
  return out;
}

int GradedResolution::length() const { return static_cast<int>(free_modules().size()) - 1; }

GradedResolution free_resolution(const Submodule& m, Resolved kind, const ResolutionOptions& opt) {
  if (!m.is_homogeneous()) throw HypothesisError("free resolution needs a homogeneous presentation");
  GradedResolution res;
  res.kind = kind;
  res.resolved = m;
  const RingPtr& ring = m.ring();
  int cap = opt.max_length < 0 ? ring->nvars() : opt.max_length;
  // homological index of modules[i] is i for quotients and i - 1 for submodules
  int offset = kind == Resolved::Submodule ? 1 : 0;

  Submodule g = groebner(m, opt.budget);
  std::vector<ModuleElement> current = nonzero(opt.schreyer_from_gb ? g.gb() : g.min_generators());
  res.modules.push_back(m.module());
  while (!current.empty()) {
    int next_index = static_cast<int>(res.modules.size()) - offset;
    if (next_index > cap) {
      res.complete = false;
      break;
    }
    Submodule s = syzygies(current, opt.budget);
    res.modules.push_back(s.module());
    res.maps.push_back(std::move(current));
    current = nonzero(opt.schreyer_from_gb ? groebner(s, opt.budget).gb() : s.generators());
  }
  if (opt.schreyer_from_gb) res = minimize(std::move(res));
  return res;
}

GradedResolution minimize(GradedResolution res) {
  std::size_t start = res.kind == Resolved::Submodule ? 1 : 0;
  for (std::size_t i = start; i < res.maps.size(); ++i) {
    for (;;) {
      auto [k, c] = find_unit(res.maps[i]);
      if (k < 0) break;
      cancel(res, i, k, c);
    }
  }
  return res;
}

BettiTable betti_table(const GradedResolution& res) {
  BettiTable t;
  auto f = res.free_modules();
  for (int i = 0; i < static_cast<int>(f.size()); ++i)
    for (long s : f[static_cast<std::size_t>(i)]->shifts()) ++t[{i, s}];
  return t;
}

std::vector<long> betti_ranks(const GradedResolution& res) {
  std::vector<long> r;
  for (const auto& f : res.free_modules()) r.push_back(f->rank());
  return r;
}

int pdim(const GradedResolution& res) { return res.length(); }

std::string betti_json(const GradedResolution& res) {
  nlohmann::json j;
  j["betti"] = nlohmann::json::array();
  for (const auto& [k, v] : betti_table(res)) j["betti"].push_back({k.first, k.second, v});
  j["pdim"] = pdim(res);
  return j.dump();
}

bool is_complex(const GradedResolution& res) {
  for (std::size_t i = 1; i < res.maps.size(); ++i) {
    for (const auto& e : res.maps[i]) {
      ModuleElement acc(res.modules[i - 1]);
      for (int k = 0; k < e.rank(); ++k)
        if (!e[k].is_zero()) acc += e[k] * res.maps[i - 1][static_cast<std::size_t>(k)];
      if (!acc.is_zero()) return false;
    }
  }
  return true;
}

HilbertSeries resolved_series(const GradedResolution& res) {
  return res.kind == Resolved::Quotient ? hilbert_series(res.resolved) : submodule_series(res.resolved);
}

bool euler_characteristic_check(const GradedResolution& res, const HilbertSeries& expected) {
  HilbertSeries alt(expected.denominator_weights());
  auto f = res.free_modules();
  for (std::size_t i = 0; i < f.size(); ++i) {
    HilbertSeries h = hilbert_series(f[i]);
    alt += i % 2 ? h.scaled(-1) : h;
  }
  if (!(alt == expected)) return false;
  try {
    std::vector<HilbertSeries> image;
    for (std::size_t i = 0; i < res.maps.size(); ++i)
      image.push_back(submodule_series(Submodule(res.modules[i], res.maps[i])));
    HilbertSeries zero(expected.denominator_weights());
    auto im = [&](std::size_t i) { return i < image.size() ? image[i] : zero; };
    if (res.kind == Resolved::Quotient) {
      if (!(hilbert_series(res.modules[0]) - im(0) == expected)) return false;
    } else if (!(im(0) == expected)) {
      return false;
    }
    for (std::size_t i = 1; i < res.modules.size(); ++i)
      if (!(hilbert_series(res.modules[i]) == im(i - 1) + im(i))) return false;
  } catch (const HypothesisError&) {
    return false;
  }
  return true;
}

}  // namespace logdiv
