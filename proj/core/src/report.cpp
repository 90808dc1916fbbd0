#include "clusterlab/report.hpp"

namespace clusterlab {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::partial:
      return "partial";
  }
  return "unknown";
}

CheckResult merge(CheckResult a, const CheckResult& b) {
  a.explored += b.explored;
  a.verified_depth = std::min(a.verified_depth, b.verified_depth);
  if (b.status == Status::fail) {
    if (a.status != Status::fail || (b.witness && a.witness && *b.witness < *a.witness)) {
      a.status = Status::fail;
      a.witness = b.witness;
      a.root = b.root;
      a.detail = b.detail;
    }
  } else if (b.status == Status::partial && a.status == Status::pass) {
    a.status = Status::partial;
    a.detail = b.detail;
  }
  return a;
}

}  // namespace clusterlab
