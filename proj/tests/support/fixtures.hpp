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


#pragma once

#include <string_view>

namespace umlprof::testing {

// The published MedicalImageAnnotation listing, character for character,
// followed by the closing tags it leaves out.
inline constexpr std::string_view kPublishedListing =
    R"(<?xml version="1.0" encoding="UTF-8"?> <PROFILE version="1.0">
<HEADER> <NAME>MedicalImageAnnotation</NAME>
<DISPLAYNAME>MedicalImageAnnotation</DISPLAYNAME>
<DESCRIPTION>Medical Image Annotation conceptual modeling</DESCRIPTION>
</HEADER>
<BODY>
<STEREOTYPELIST>
<STEREOTYPE> <NAME>MedicalImageAnnotationObject</NAME>
<DESCRIPTION>Object view.</DESCRIPTION>
<BASECLASSES>
<BASECLASS>UMLAbstractClass</BASECLASS>
<BASECLASS>UMLAttribute</BASECLASS>
<BASECLASS>UMLPackage</BASECLASS>
<BASECLASS>UMLSequenceDiagram</BASECLASS>
</BASECLASSES>
</STEREOTYPE>)"
    "\n</STEREOTYPELIST>\n</BODY>\n</PROFILE>\n";

// The shorter listing: header only, no BODY.
inline constexpr std::string_view kPublishedHeaderOnly =
    R"(<?xml version="1.0" encoding="UTF-8"?> <PROFILE version="1.0">
<HEADER> <NAME>MedicalImageAnnotation</NAME>
<DISPLAYNAME>MedicalImageAnnotation</DISPLAYNAME>
<DESCRIPTION>Medical Image Annotation conceptual modeling</DESCRIPTION>
</HEADER>)"
    "\n</PROFILE>\n";

}  // namespace umlprof::testing
