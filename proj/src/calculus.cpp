#include "qsheaf/calculus.hpp"

#include <exception>
#include <mutex>

#include "qsheaf/bott.hpp"
#include "qsheaf/les.hpp"
#include "qsheaf/q2.hpp"
#include "qsheaf/spinor_products.hpp"

namespace qsheaf {

namespace {

void startup_self_check() {
  static std::once_flag once;
  std::call_once(once, [] { bott::self_check_duality(8); });
}

std::vector<CohomValue> zeros(int n) { return std::vector<CohomValue>(static_cast<std::size_t>(n + 1)); }

void add_into(std::vector<CohomValue>& acc, const std::vector<CohomValue>& x) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i] + x[i];
}

std::string cache_key(const SheafExpr& e, const SpinorLabel* b, int t) {
  std::string k = e.to_string();
  k += '|';
  k += b ? to_string(*b) : "-";
  k += '|';
  k += std::to_string(t);
  return k;
}

// Runs body(t) over the window, in parallel when requested; rethrows the first failure.
template <class F>
void for_each_twist(Window w, Execution ex, F&& body) {
  if (ex == Execution::Serial) {
    for (int t = w.lo; t <= w.hi; ++t) body(t);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic)
  for (int t = w.lo; t <= w.hi; ++t) {
    try {
      body(t);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

SheafCalculus::SheafCalculus() : SheafCalculus(FactRegistry::standard()) {}

SheafCalculus::SheafCalculus(FactRegistry registry) : registry_(std::move(registry)) { startup_self_check(); }

std::vector<CohomValue> SheafCalculus::generator_column(const Quadric& q, const Generator& g,
                                                        const SpinorLabel* b, int t) const {
  const int n = q.n();
  auto col = zeros(n);
  if (!b) {
    for (int i = 0; i <= n; ++i) col[i] = CohomValue::exact(bott::generator_cohom(q, g, t, i));
    return col;
  }
  if (!q.valid_label(*b)) throw StructuralError("spinor label " + to_string(*b) + " is invalid on Q" + std::to_string(n));
  switch (g.kind) {
    case GeneratorKind::Line:
      for (int i = 0; i <= n; ++i) col[i] = CohomValue::exact(bott::spinor_cohom(n, *b, g.twist + t, i));
      return col;
    case GeneratorKind::Skyscraper:
      col[0] = CohomValue::exact(g.length * q.spinor_rank());
      return col;
    case GeneratorKind::Spinor:
      if (n == 2) {
        const auto d = q2::spinor_bidegree(g.label) + q2::spinor_bidegree(*b);
        for (int i = 0; i <= n; ++i) col[i] = CohomValue::exact(q2::kunneth_cohom(d.twisted(g.twist + t), i));
        return col;
      }
      return spinor_products(n).column(g.label, *b, g.twist + t);
  }
  return col;
}

std::vector<CohomValue> SheafCalculus::compute(const SheafExpr& e, const SpinorLabel* b, int t) const {
  const Quadric& q = e.quadric();
  const int n = q.n();
  if (const auto* a = std::get_if<node::Atom>(&e.node())) {
    auto col = zeros(n);
    for (const auto& g : a->generators) add_into(col, generator_column(q, g, b, t));
    return col;
  }
  if (const auto* s = std::get_if<node::Sum>(&e.node())) {
    auto col = zeros(n);
    for (const auto& term : s->terms) add_into(col, lookup(term, b, t));
    return col;
  }
  if (const auto* tw = std::get_if<node::Twist>(&e.node())) return lookup(tw->child, b, t + tw->k);
  if (const auto* x = std::get_if<node::Quotient>(&e.node())) {
    const auto sub = lookup(x->sub, b, t);
    const auto mid = lookup(x->mid, b, t);
    les::LesInstance inst;
    inst.twist = t;
    inst.context = "quotient " + e.body();
    for (int i = 0; i <= n; ++i) {
      inst.slots.push_back(les::SlotRange::of(sub[i]));
      inst.slots.push_back(les::SlotRange::of(mid[i]));
      inst.slots.push_back(les::SlotRange::unknown());
    }
    const auto sol = les::solve(inst);
    auto col = zeros(n);
    for (int i = 0; i <= n; ++i) col[i] = les::to_value(sol.slots[les::slot_index(i, 2)], t, i);
    return col;
  }
  const auto& r = std::get<node::Restrict>(e.node());
  if (b) return lookup(push_restrictions(e), b, t);
  // 0 -> F(t-1) -> F(t) -> F|(t) -> 0 with F on Q_{n+1}
  const auto before = lookup(r.child, nullptr, t - 1);
  const auto here = lookup(r.child, nullptr, t);
  les::LesInstance inst;
  inst.twist = t;
  inst.context = "restriction " + e.body();
  for (int i = 0; i <= n + 1; ++i) {
    inst.slots.push_back(les::SlotRange::of(before[i]));
    inst.slots.push_back(les::SlotRange::of(here[i]));
    inst.slots.push_back(i == n + 1 ? les::SlotRange::known(0) : les::SlotRange::unknown());
  }
  const auto sol = les::solve(inst);
  auto col = zeros(n);
  for (int i = 0; i <= n; ++i) col[i] = les::to_value(sol.slots[les::slot_index(i, 2)], t, i);
  return col;
}

std::vector<CohomValue> SheafCalculus::lookup(const SheafExpr& e, const SpinorLabel* b, int t) const {
  const std::string key = cache_key(e, b, t);
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  auto col = compute(e, b, t);
  std::unique_lock lock(mutex_);
  cache_.emplace(key, col);
  return col;
}

std::vector<CohomValue> SheafCalculus::column(const SheafExpr& e, int t) const { return lookup(e, nullptr, t); }

CohomValue SheafCalculus::cell(const SheafExpr& e, int i, int t) const {
  if (i < 0 || i > e.quadric().n()) return CohomValue::exact(0);
  return column(e, t)[static_cast<std::size_t>(i)];
}

std::vector<CohomValue> SheafCalculus::twisted_column(const SheafExpr& e, SpinorLabel b, int t) const {
  if (!e.quadric().valid_label(b)) {
    throw StructuralError("spinor label " + to_string(b) + " is invalid on Q" + std::to_string(e.quadric().n()));
  }
  return lookup(e, &b, t);
}

CohomValue SheafCalculus::spinor_twisted_cohom(const SheafExpr& e, SpinorLabel b, int t, int i) const {
  if (i < 0 || i > e.quadric().n()) return CohomValue::exact(0);
  return twisted_column(e, b, t)[static_cast<std::size_t>(i)];
}

CohomTable SheafCalculus::table(const SheafExpr& e, Window w, Execution ex) const {
  CohomTable out(e.quadric().n(), w);
  for_each_twist(w, ex, [&](int t) { out.set_column(t, column(e, t)); });
  return out;
}

CohomTable SheafCalculus::twisted_table(const SheafExpr& e, SpinorLabel b, Window w, Execution ex) const {
  CohomTable out(e.quadric().n(), w);
  for_each_twist(w, ex, [&](int t) { out.set_column(t, twisted_column(e, b, t)); });
  return out;
}

BundleProfile SheafCalculus::profile(const SheafExpr& e, Window w, Execution ex) const {
  BundleProfile p{e.quadric().n(), w, table(e, w, ex), e.quadric().labels(), {}};
  for (auto b : p.labels) p.twisted.push_back(twisted_table(e, b, w, ex));
  return p;
}

Dim SheafCalculus::euler_char(const SheafExpr& e, int t) const {
  const Quadric& q = e.quadric();
  if (const auto* a = std::get_if<node::Atom>(&e.node())) {
    Dim chi = 0;
    for (const auto& g : a->generators) chi += bott::euler_char_generator(q, g, t);
    return chi;
  }
  if (const auto* s = std::get_if<node::Sum>(&e.node())) {
    Dim chi = 0;
    for (const auto& term : s->terms) chi += euler_char(term, t);
    return chi;
  }
  if (const auto* tw = std::get_if<node::Twist>(&e.node())) return euler_char(tw->child, t + tw->k);
  if (const auto* x = std::get_if<node::Quotient>(&e.node())) return euler_char(x->mid, t) - euler_char(x->sub, t);
  const auto& r = std::get<node::Restrict>(e.node());
  return euler_char(r.child, t) - euler_char(r.child, t - 1);
}

Window SheafCalculus::safe_window(const SheafExpr& e) {
  const int span = e.max_abs_twist() + e.depth();
  return {-e.quadric().n() - 2 - span, span + 2};
}

void SheafCalculus::clear_cache() const {
  std::unique_lock lock(mutex_);
  cache_.clear();
}

std::size_t SheafCalculus::cache_size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

}  // namespace qsheaf
