#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "foliage/config.hpp"
#include "foliage/foliation_model.hpp"

namespace foliage {

enum class StructureLevel { riemannian, hermitian, kahler, kahler_automorphic, taut };

std::string to_string(StructureLevel level);
StructureLevel parse_structure_level(const std::string& s);

struct IdentityEntry {
  std::string id;  // "I1" .. "I23"
  StructureLevel level = StructureLevel::riemannian;
  std::string statement;
  bool applicable = false;
  std::string skip_reason;
  double max_residual = 0.0;
  double trial_residual = 0.0;   // worst over random forms
  double matrix_residual = 0.0;  // worst over the basis sweep
  int trials = 0;
  int sweep_K = 0;
  bool pass = false;
};

struct IdentitySuiteResult {
  std::string model_id;
  int K = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::string filter;
  Thresholds thresholds;
  std::vector<IdentityEntry> entries;  // sorted by identity number
  // Every applicable entry passed.
  bool all_pass() const;
};

// Catalogue of identity ids with their levels and statements.
std::vector<IdentityEntry> identity_catalogue();

// filter: "all", a level name, or a comma-separated id list such as "I1,I5".
IdentitySuiteResult run_identities(const FoliationModel& model, const std::string& filter, int K, std::uint64_t seed,
                                   int trials, const Thresholds& th = {});

}  // namespace foliage
