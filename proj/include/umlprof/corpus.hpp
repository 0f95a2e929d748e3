// Copyright 2026 The umlprof Authors
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

// Built-in Medical Image Annotation profile, its reference models, and the
// mutation fixtures that pin the validator's behavior.

#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "umlprof/model.hpp"
#include "umlprof/profile.hpp"
#include "umlprof/validator.hpp"

namespace umlprof::corpus {

inline constexpr std::string_view kProfileName = "MedicalImageAnnotation";
inline constexpr std::string_view kProfileFile = "mia_profile.xml";
inline constexpr std::string_view kClassModelFile = "class_model.xml";
inline constexpr std::string_view kSequenceModelFile = "sequence_model.xml";

// Ids used by the reference models.
inline constexpr std::string_view kAnnotationId = "e1";
inline constexpr std::string_view kMedicalImageId = "e2";
inline constexpr std::string_view kAnnotatorId = "e3";
inline constexpr std::string_view kPatientId = "e4";
inline constexpr std::string_view kKeyWordsId = "e5";
inline constexpr std::string_view kClassDiagramId = "d1";
inline constexpr std::string_view kSequenceDiagramId = "sd1";

Profile builtin_profile();
ModelDocument builtin_class_model();
ModelDocument builtin_sequence_model();

struct Mutation {
  std::string name;
  Profile profile;
  ModelDocument model;
  ValidationOptions options;
  std::set<std::string> expected_codes;
};

std::vector<Mutation> mutation_suite();

// lint_profile(profile) followed by check_document(model, {profile}).
ValidationReport run_mutation(const Mutation& m);

}  // namespace umlprof::corpus
