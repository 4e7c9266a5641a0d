#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fqloop/endo.hpp"
#include "fqloop/polyring.hpp"
#include "fqloop/report.hpp"

namespace fqloop {

inline constexpr std::uint64_t kDefaultSeed = 0xF00D;

/// A generalized module over the ring R, stored as an NK-loop together with
/// the images (phi, psi, mu, nu) of x, y, u, v. The constructor only checks
/// shapes; `make_module` additionally enforces the NK, speciality and
/// commutation invariants.
class GenModule {
 public:
  GenModule(LoopTable loop, ActionImages action);

  const LoopTable& loop() const noexcept { return ctx_->loop(); }
  const EndoContext& context() const noexcept { return *ctx_; }
  const ActionImages& action() const noexcept { return action_; }
  const Endo& phi() const noexcept { return action_[0]; }
  const Endo& psi() const noexcept { return action_[1]; }
  const Endo& mu() const noexcept { return action_[2]; }
  const Endo& nu() const noexcept { return action_[3]; }

  /// The map x ↦ p·x.
  Endo act(const Poly& p) const { return evaluate_unchecked(p, action_, *ctx_); }

  friend bool operator==(const GenModule& a, const GenModule& b) {
    return a.loop() == b.loop() && a.action_ == b.action_;
  }

 private:
  std::shared_ptr<const EndoContext> ctx_;
  ActionImages action_;
};

/// Throws NotNKLoop, ImagesNotSpecial or ImagesNotCommuting.
GenModule make_module(LoopTable loop, ActionImages action);

struct PointedGenModule {
  GenModule module;
  Element point;
};

Element scalar_mul(const GenModule& m, const Poly& p, Element x);

/// Axioms 1-3 on generator polynomials and seeded random degree <= 2
/// polynomials; axioms 4-6 on every element of Q, N and K respectively.
Report verify_module_axioms(const GenModule& m, std::uint64_t seed = kDefaultSeed);
/// 2z + xz, 2z + yz ∈ N; x + u + xu and y + v + yv annihilate.
Report verify_class_m(const GenModule& m);
bool annihilator_contains(const GenModule& m, const Poly& p);

bool is_nuclearly_pointed(const PointedGenModule& pm);
bool is_centrally_pointed(const PointedGenModule& pm);

/// Loop table, then "phi: ...", "psi: ...", "mu: ...", "nu: ..." lines and an
/// optional "point k" line.
struct ModuleFile {
  std::vector<std::string> comments;
  GenModule module;
  std::optional<Element> point;
};

ModuleFile parse_module_file(std::string_view text);
std::string serialize_module(const GenModule& m, std::optional<Element> point = std::nullopt);

}  // namespace fqloop
