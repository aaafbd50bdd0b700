#include "clspec/verifier.hpp"

#include <chrono>
#include <stdexcept>

namespace clspec {
namespace {

std::uint64_t pick(const CheckOptions& o, std::uint64_t quick, std::uint64_t full) {
  if (o.range) return *o.range;
  return o.profile == Profile::quick ? quick : full;
}

CheckRegistry build_registry() {
  CheckRegistry r;
  r.add({"lte", "lifting-the-exponent closed forms against direct r-parts", [](const CheckOptions& o) {
           return check_lte(static_cast<long>(pick(o, 50, 50)), 40, 50, o.jobs);
         }});
  r.add({"zsigmondy", "R_i(a) empty exactly on the Bang-Zsigmondy exceptions", [](const CheckOptions& o) {
           return check_zsigmondy(static_cast<long>(pick(o, 100, 100)), 50, o.jobs);
         }});
  r.add({"kiphi", "closed-form k_i against the definitional product", [](const CheckOptions& o) {
           return check_kiphi(static_cast<long>(pick(o, 60, 60)), 30, o.jobs);
         }});
  for (int part = 1; part <= 5; ++part) {
    r.add({"bounds-" + std::to_string(part), "bounds lemma, part " + std::to_string(part),
           [part](const CheckOptions& o) { return check_bounds_lemma(part, pick(o, 500, 2000), o.jobs); }});
  }
  r.add({"ineq", "product inequality for k_i over index sets of size 2..4",
         [](const CheckOptions& o) { return check_ineq_lemma(pick(o, 500, 2000), 30, o.jobs); }});
  r.add({"k5", "k_5 collisions between prime powers",
         [](const CheckOptions& o) { return search_k5_collisions(pick(o, 200, 200), o.jobs); }});
  for (const char* lemma : {"igcd", "igcd1", "igcd2"}) {
    r.add({lemma, std::string("gcd bounds of lemma ") + lemma, [lemma](const CheckOptions& o) {
             return check_gcd_lemmas(lemma, static_cast<long>(pick(o, 500, 500)), o.jobs);
           }});
  }
  r.add({"zy", "Table 1 coherence", [](const CheckOptions& o) { return check_zy(pick(o, 500, 2000), o.jobs); }});
  r.add({"kzky", "bounds on k_z and k_y",
         [](const CheckOptions& o) { return check_kzky(pick(o, 500, 2000), o.jobs); }});
  r.add({"exp", "exponent parts exp_r(L) for r >= 7",
         [](const CheckOptions& o) { return check_exp(pick(o, 200, 2000), o.jobs); }});
  r.add({"l8-nosol", "k_8(u) = k_7(-13) has no solution", [](const CheckOptions&) {
           return check_k_equation("l8-nosol", 8, k_i(7, Integer(-13)), false);
         }});
  r.add({"o10-nosol", "k_5(+-u) = k_7(-25) has no solution", [](const CheckOptions&) {
           return check_k_equation("o10-nosol", 5, k_i(7, Integer(-25)), true);
         }});
  r.add({"small", "finite enumerations for small q and u", [](const CheckOptions&) { return check_small_cases(); }});
  r.add({"fpoly", "f(eq) checks for q <= 59",
         [](const CheckOptions& o) { return check_fpoly_cases(pick(o, 59, 59)); }});
  r.add({"t5", "seventh-power case with u <= 272", [](const CheckOptions&) { return check_t5_seventh_power_case(); }});
  return r;
}

}  // namespace

std::string_view to_string(Profile profile) { return profile == Profile::quick ? "quick" : "full"; }

Profile parse_profile(std::string_view text) {
  if (text == "quick") return Profile::quick;
  if (text == "full") return Profile::full;
  throw std::invalid_argument("unknown profile '" + std::string(text) + "' (expected quick or full)");
}

void CheckRegistry::add(CheckEntry entry) {
  if (find(entry.id)) throw std::invalid_argument("duplicate check id '" + entry.id + "'");
  entries_.push_back(std::move(entry));
}

const CheckEntry* CheckRegistry::find(std::string_view id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

std::vector<std::string> CheckRegistry::ids() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.id);
  return out;
}

const CheckRegistry& default_registry() {
  static const CheckRegistry registry = build_registry();
  return registry;
}

std::vector<CheckReport> run_checks(const CheckRegistry& registry, const std::vector<std::string>& ids,
                                    const CheckOptions& options) {
  std::vector<const CheckEntry*> selected;
  for (const auto& id : ids) {
    const CheckEntry* e = registry.find(id);
    if (!e) {
      std::string known;
      for (const auto& k : registry.ids()) known += (known.empty() ? "" : ", ") + k;
      throw std::invalid_argument("unknown check id '" + id + "'; available: " + known);
    }
    selected.push_back(e);
  }
  std::vector<CheckReport> out;
  for (const auto* e : selected) {
    const auto start = std::chrono::steady_clock::now();
    try {
      out.push_back(e->run(options));
    } catch (const std::exception& ex) {
      // An aborted check is reported as a failure, not propagated.
      CheckReport r;
      r.check_id = e->id;
      r.domain_description = e->summary;
      r.counterexamples.push_back(std::string("(aborted: ") + ex.what() + ")");
      r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      r.finalize();
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<CheckReport> run_all(const CheckRegistry& registry, const CheckOptions& options) {
  if (registry.empty()) throw std::runtime_error("no checks registered");
  return run_checks(registry, registry.ids(), options);
}

}  // namespace clspec
