#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "artinforge/groebner.hpp"
#include "artinforge/reptheory.hpp"

namespace artinforge::lab {

enum class Status { Pass, Fail, Skipped };

const char* status_name(Status s);

struct VerificationReport {
  std::string claim;
  int n = 0;
  Status status = Status::Skipped;
  std::optional<std::string> witness;  // set on failure
  std::string detail;                  // human-readable summary of what was checked
  std::int64_t millis = 0;
  int ambient = 0;                     // variable count of the ring the check ran in
};

std::string to_json(const VerificationReport& r);
std::string to_text(const VerificationReport& r);

struct VerifyOptions {
  GroebnerOptions groebner{};
  bool allow_large_n = false;
  bool timing = false;  // millis stays 0 unless set, keeping output reproducible
};

struct ClaimInfo {
  std::string id;
  int min_n = 2;
  std::string summary;
};

// Registered claims in a fixed order.
const std::vector<ClaimInfo>& claims();
bool is_claim(const std::string& id);

constexpr int kMaxDefaultN = 7;
constexpr int kMaxLargeN = 8;

/// Runs one claim. n below the claim's minimum yields Skipped; n outside the
/// supported range throws Range. ResourceLimit errors propagate; any other
/// library error becomes a failure carrying the message as witness.
VerificationReport verify(const std::string& claim, int n, const VerifyOptions& options = {});

/// Graded character of the homogeneous quotient: degree r holds the trace of
/// each conjugacy class on the degree-r piece.
rep::GradedClassFunction challenge_series(int n, const GroebnerOptions& options = {});

// Row-sum and binomial-identity checks of the symmetrised triangle.
VerificationReport row_sum_check(int n);
VerificationReport identity_check(int n);
// Pascal recursion, symmetry and strict increase up to the middle term.
VerificationReport triangle_shape_check(int n);

}  // namespace artinforge::lab
