#ifndef TWOBRAID_MODEL_IO_HPP
#define TWOBRAID_MODEL_IO_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twobraid/crossed_module.hpp"

namespace twobraid {

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Crossed module with finite bases given by explicit structure constants.
// Instances are validated on construction: both brackets must be
// antisymmetric and satisfy the Jacobi identity on all basis triples,
// partial must intertwine the action with the adjoint action, and the
// Peiffer identity [u,v] = partial(u) |> v must hold on all h pairs.
class FiniteCrossedModule : public CrossedModule {
 public:
  struct Data {
    std::vector<std::string> g_names;
    std::vector<std::string> h_names;
    // [g_i, g_j] = sum_k coeff * g_k, keyed by (i,j).
    std::map<std::pair<int, int>, LetterComb> g_bracket;
    std::map<std::pair<int, int>, LetterComb> h_bracket;
    // partial(h_i) = sum_j coeff * g_j.
    std::map<int, LetterComb> partial;
    // g_i |> h_j = sum_k coeff * h_k, keyed by (i,j).
    std::map<std::pair<int, int>, LetterComb> action;
  };

  explicit FiniteCrossedModule(Data data);

  using CrossedModule::bracket;
  using CrossedModule::partial;
  LetterComb bracket(const Letter& a, const Letter& b) const override;
  LetterComb partial(const Letter& h) const override;
  std::optional<LetterComb> section(const Letter& g) const override;
  std::vector<Letter> g_basis(int degree_bound) const override;
  std::vector<Letter> h_basis(int degree_bound) const override;
  std::string name(const Letter& l) const override;

  int g_dim() const { return static_cast<int>(data_.g_names.size()); }
  int h_dim() const { return static_cast<int>(data_.h_names.size()); }

 private:
  void validate() const;
  void build_sections();

  Data data_;
  // Preimage of each g basis letter under partial, when it exists.
  std::vector<std::optional<LetterComb>> sections_;
};

// Parses the versioned instance format:
//
//   version 1
//   g_basis X Y Z
//   h_basis u v
//   g_bracket i j k p/q      # [g_i, g_j] += (p/q) g_k
//   h_bracket i j k p/q
//   partial i j p/q          # partial(h_i) += (p/q) g_j
//   action i j k p/q         # g_i |> h_j += (p/q) h_k
//
// Indices are zero-based; '#' starts a comment. Both bracket tables may list
// either orientation of a pair; if both orientations are present they must
// be antisymmetric, otherwise the missing one is filled in by antisymmetry.
// Explicitly non-antisymmetric input is rejected with a diagnostic naming
// the offending pair.
FiniteCrossedModule parse_model(std::istream& in);
FiniteCrossedModule load_model(const std::string& path);

// sl2 with trivial h, in the vector-field basis convention
// [f,e] = 2k, [k,e] = e, [k,f] = -f. The degenerate crossed module used for
// classical (1-categorical) baselines.
FiniteCrossedModule sl2_model();

}  // namespace twobraid

#endif
