#pragma once

#include "clusterlab/arith.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clusterlab {

enum class Status { pass, fail, partial };

std::string_view to_string(Status s);

/// Result of one named verification pass.
///
/// A failing result carries the mutation path of its first witness (and, for
/// re-rooted walks, the path of the root it was found under) so the failure
/// can be reproduced from the input matrix alone.
struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::size_t explored = 0;
  std::size_t verified_depth = 0;
  std::optional<Path> witness;
  std::optional<Path> root;
  std::string detail;

  bool passed() const noexcept { return status == Status::pass; }

  static CheckResult failure(std::string name, Path witness, std::string detail) {
    CheckResult r;
    r.name = std::move(name);
    r.status = Status::fail;
    r.witness = std::move(witness);
    r.detail = std::move(detail);
    return r;
  }
};

/// Keeps the lexicographically least failing witness when merging results of
/// the same check computed on separate subtrees.
CheckResult merge(CheckResult a, const CheckResult& b);

}  // namespace clusterlab
