// Copyright 2026 The qtele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * JSON forms of the library's records. Keys are emitted in a fixed order so
 * identical inputs give byte-identical output.
 */

#pragma once

#include <json.hpp>

#include "qtele/protocol.hpp"
#include "qtele/resources.hpp"
#include "qtele/statevector.hpp"
#include "qtele/verify.hpp"

namespace qtele {

using Json = nlohmann::ordered_json;

/// {"labels": [...], "amplitudes": [[re, im], ...]} in basis-index order.
Json to_json(const StateVector &state);
StateVector state_from_json(const Json &j);

Json to_json(const CoefficientSet &c);

/// Transcript fields; the rebuilt output state is not included.
Json to_json(const TeleportTranscript &t);
TeleportTranscript transcript_from_json(const Json &j);

Json to_json(const IdentityReport &r);
Json to_json(const ResourceReport &r);

} // namespace qtele
