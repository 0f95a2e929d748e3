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

#include "umlprof/corpus.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace umlprof::corpus {

namespace {

const std::string kProfile(kProfileName);

Stereotype class_stereotype(std::string name, std::string description,
                            std::string icon) {
  Stereotype s;
  s.name = std::move(name);
  s.description = std::move(description);
  s.base_classes = {MetaClass::kUMLClass};
  s.icon = std::move(icon);
  return s;
}

Stereotype object_stereotype(std::string name, std::string description,
                             std::string icon) {
  Stereotype s = class_stereotype(std::move(name), std::move(description),
                                  std::move(icon));
  s.base_classes = {MetaClass::kUMLObject};
  return s;
}

StereotypeApplication apply(std::string stereotype,
                            std::map<std::string, std::string> tags = {}) {
  return StereotypeApplication{kProfile, std::move(stereotype), std::move(tags)};
}

ModelElement& element(ModelDocument& m, std::string_view id) {
  return *std::find_if(m.elements.begin(), m.elements.end(),
                       [id](const ModelElement& e) { return e.id == id; });
}

Stereotype& stereotype(Profile& p, std::string_view name) {
  return *std::find_if(p.stereotypes.begin(), p.stereotypes.end(),
                       [name](const Stereotype& s) { return s.name == name; });
}

}  // namespace

Profile builtin_profile() {
  Profile p;
  p.name = kProfile;
  p.display_name = kProfile;
  p.description = "Medical Image Annotation conceptual modeling";
  p.version = "1.0";

  Stereotype annotation = class_stereotype(
      "Annotation",
      "This stereotype indicates that the class represents the annotation",
      "ann16");
  annotation.tag_defs.push_back(
      TagDefinition{"revision", TagType::kInt, {}, std::string("1")});
  annotation.constraints.push_back(
      make_constraint("has_keyword", "self.keywords->size() >= 1"));
  annotation.constraints.push_back(
      make_constraint("single_image", "self.nav('image')->size() = 1"));

  Stereotype image = class_stereotype(
      "MedicalImage",
      "This stereotype indicates that the class represents the image for the "
      "annotation",
      "img16");
  image.tag_defs.push_back(TagDefinition{
      "modality", TagType::kEnum, {"CT", "MRI", "XRay", "Ultrasound", "PET"}, {}});

  p.stereotypes.push_back(std::move(annotation));
  p.stereotypes.push_back(std::move(image));
  p.stereotypes.push_back(class_stereotype(
      "Annotator",
      "This stereotype indicates that the class represents the annotator of "
      "medical image",
      "annotator16"));
  p.stereotypes.push_back(class_stereotype(
      "Patient", "This stereotype indicates that the class represents the patient",
      "patient16"));
  p.stereotypes.push_back(class_stereotype(
      "KeyWords",
      "This stereotype indicates that the class represents the key words of "
      "annotation",
      "kw16"));
  p.stereotypes.push_back(object_stereotype(
      "Interface", "This stereotype indicates that the Interface.", "iface16"));
  p.stereotypes.push_back(object_stereotype(
      "Controller", "This stereotype indicates that the controller.", "ctrl16"));
  return p;
}

ModelDocument builtin_class_model() {
  ModelDocument m;
  m.name = "MedicalImageAnnotationClasses";
  m.imports = {kProfile};

  auto cls = [&m](std::string_view id, std::string name,
                  std::vector<Attribute> attributes, StereotypeApplication app) {
    ModelElement e;
    e.id = std::string(id);
    e.metaclass = MetaClass::kUMLClass;
    e.name = std::move(name);
    e.attributes = std::move(attributes);
    e.applications.push_back(std::move(app));
    m.elements.push_back(std::move(e));
  };
  cls(kAnnotationId, "Annotation",
      {{"id", "int"}, {"date", "Date"}, {"text", "String"}}, apply("Annotation"));
  cls(kMedicalImageId, "MedicalImage",
      {{"id", "int"}, {"modality", "String"}, {"acquisitionDate", "Date"}},
      apply("MedicalImage", {{"modality", "MRI"}}));
  cls(kAnnotatorId, "Annotator", {{"name", "String"}, {"speciality", "String"}},
      apply("Annotator"));
  cls(kPatientId, "Patient", {{"name", "String"}, {"birthDate", "Date"}},
      apply("Patient"));
  cls(kKeyWordsId, "KeyWords", {{"term", "String"}}, apply("KeyWords"));

  auto assoc = [&m](std::string id, std::string_view source,
                    std::string_view target, std::string source_role,
                    std::string target_role, std::string source_mult,
                    std::string target_mult) {
    m.associations.push_back(Association{std::move(id), std::string(source),
                                         std::string(target), std::move(source_role),
                                         std::move(target_role), std::move(source_mult),
                                         std::move(target_mult), {}});
  };
  assoc("a1", kAnnotationId, kMedicalImageId, "annotations", "image", "0..*", "1..1");
  assoc("a2", kAnnotationId, kKeyWordsId, "annotations", "keywords", "0..*", "1..*");
  assoc("a3", kAnnotationId, kAnnotatorId, "annotations", "annotator", "0..*", "1..1");
  assoc("a4", kMedicalImageId, kPatientId, "images", "patient", "0..*", "1..1");

  Diagram d;
  d.id = std::string(kClassDiagramId);
  d.kind = DiagramKind::kClass;
  for (const auto& e : m.elements) d.members.push_back(e.id);
  m.diagrams.push_back(std::move(d));
  return m;
}

ModelDocument builtin_sequence_model() {
  ModelDocument m;
  m.name = "AnnotationWorkflow";
  m.imports = {kProfile};

  auto object = [&m](std::string id, std::string name,
                     std::optional<StereotypeApplication> app) {
    ModelElement e;
    e.id = std::move(id);
    e.metaclass = MetaClass::kUMLObject;
    e.name = std::move(name);
    if (app) e.applications.push_back(std::move(*app));
    m.elements.push_back(std::move(e));
  };
  object("o1", "Annotator", std::nullopt);
  object("o2", "SearchUI", apply("Interface"));
  object("o3", "AnnotationController", apply("Controller"));
  object("o4", "ImageStore", std::nullopt);

  Diagram d;
  d.id = std::string(kSequenceDiagramId);
  d.kind = DiagramKind::kSequence;
  d.lifelines = {"o1", "o2", "o3", "o4"};
  d.messages = {
      {1, "o1", "o2", "sendQueryImage", MessageKind::kCall},
      {2, "o2", "o3", "consultImageTable", MessageKind::kCall},
      {3, "o3", "o4", "computeDistance", MessageKind::kCall},
      {4, "o3", "o2", "displayImagesWithDescriptions", MessageKind::kReturn},
      {5, "o1", "o2", "chooseSimilarImage", MessageKind::kCall},
      {6, "o2", "o3", "storeAnnotation", MessageKind::kCall},
  };
  m.diagrams.push_back(std::move(d));
  return m;
}

std::vector<Mutation> mutation_suite() {
  const Profile profile = builtin_profile();
  const ModelDocument classes = builtin_class_model();
  const ModelDocument sequence = builtin_sequence_model();
  const ValidationOptions strict{StereotypeMode::kStrict, false};
  const ValidationOptions uml2{StereotypeMode::kUml2, false};

  std::vector<Mutation> out;
  auto add = [&out](std::string name, Profile p, ModelDocument m,
                    ValidationOptions opts, std::set<std::string> codes) {
    out.push_back(Mutation{std::move(name), std::move(p), std::move(m), opts,
                           std::move(codes)});
  };

  add("identity", profile, classes, strict, {});
  add("identity-sequence", profile, sequence, strict, {});

  {
    ModelDocument m = classes;
    element(m, kAnnotatorId).applications = {apply("Interface")};
    add("interface-on-class", profile, std::move(m), strict, {"E201"});
  }
  {
    ModelDocument m = classes;
    m.associations[0].applications = {apply("Patient")};
    add("stereotype-on-association", profile, std::move(m), strict, {"E201"});
  }
  {
    ModelDocument m = classes;
    element(m, kAnnotationId).applications.push_back(apply("Patient"));
    add("double-stereotype", profile, m, strict, {"E202"});
    add("double-stereotype-uml2", profile, std::move(m), uml2, {});
  }
  {
    Profile p = profile;
    Stereotype dup = stereotype(p, "Patient");
    dup.name = "Annotation";
    p.stereotypes.push_back(std::move(dup));
    add("duplicate-stereotype-name", std::move(p), classes, strict, {"E101"});
  }
  {
    Profile p = profile;
    stereotype(p, "Patient").base_classes.clear();
    add("empty-base-classes", std::move(p), classes, strict, {"E103", "E201"});
  }
  {
    Profile p = profile;
    stereotype(p, "MedicalImage").tag_defs[0].default_value = "Xray";
    add("enum-default-not-choice", std::move(p), classes, strict, {"E105"});
  }
  {
    ModelDocument m = classes;
    m.imports.push_back("NoSuchProfile");
    add("unresolved-import", profile, std::move(m), strict, {"E102"});
  }
  {
    ModelDocument m = classes;
    element(m, kPatientId).applications[0].stereotype = "Doctor";
    add("unknown-stereotype", profile, std::move(m), strict, {"E102"});
  }
  {
    ModelDocument m = classes;
    std::erase_if(m.associations, [](const Association& a) { return a.id == "a2"; });
    add("keywords-removed", profile, std::move(m), strict, {"E301"});
  }
  {
    Profile p = profile;
    stereotype(p, "Annotation")
        .constraints.push_back(
            make_constraint("keyword_ratio", "self.keywords->size() / 0 >= 1"));
    add("constraint-division-by-zero", std::move(p), classes, strict, {"E302"});
  }
  {
    Profile p = profile;
    stereotype(p, "Annotation").constraints.push_back(make_constraint("named", "self.name"));
    add("constraint-not-boolean", std::move(p), classes, strict, {"E303"});
  }
  {
    ModelDocument m = classes;
    element(m, kAnnotationId).applications[0].tags["revision"] = "three";
    add("tag-type-mismatch", profile, std::move(m), strict, {"E401"});
  }
  {
    ModelDocument m = classes;
    element(m, kPatientId).applications[0].tags["color"] = "red";
    add("unknown-tag", profile, std::move(m), strict, {"E402"});
  }
  {
    ModelDocument m = classes;
    element(m, kMedicalImageId).applications[0].tags.erase("modality");
    add("missing-required-tag", profile, std::move(m), strict, {"E403"});
  }
  {
    ModelDocument m = classes;
    m.associations[3].target = "ghost";
    add("dangling-association-end", profile, std::move(m), strict, {"E501"});
  }
  {
    ModelDocument m = sequence;
    m.diagrams[0].messages[2].to = "ghost";
    add("message-endpoint-not-lifeline", profile, std::move(m), strict, {"E502"});
  }
  {
    ModelDocument m = sequence;
    m.diagrams[0].messages[4].seq = 2;
    add("duplicate-message-seq", profile, std::move(m), strict, {"E503"});
  }
  {
    ModelDocument m = classes;
    m.diagrams[0].members.push_back("ghost");
    add("unknown-diagram-member", profile, std::move(m), strict, {"E504"});
  }
  {
    ModelDocument m = classes;
    element(m, kAnnotationId).owner = std::string(kMedicalImageId);
    element(m, kMedicalImageId).owner = std::string(kAnnotationId);
    add("owner-cycle", profile, std::move(m), strict, {"E505"});
  }
  return out;
}

ValidationReport run_mutation(const Mutation& m) {
  std::vector<Diagnostic> all = lint_profile(m.profile);
  ValidationReport doc = check_document(m.model, make_registry({m.profile}), m.options);
  all.insert(all.end(), doc.diagnostics.begin(), doc.diagnostics.end());
  sort_diagnostics(all);
  return ValidationReport::from(std::move(all));
}

}  // namespace umlprof::corpus
