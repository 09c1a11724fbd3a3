/*
 * Copyright 2026 The ccdist Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ccdist_tools/report.hpp"

#include "json.hpp"

namespace ccdist::cli {

namespace {

using Json = nlohmann::ordered_json;

Json traffic_json(const TrafficCounters& t) {
  return Json{{"records_sent", t.records_sent},
              {"bytes_sent", t.bytes_sent},
              {"records_received", t.records_received},
              {"bytes_received", t.bytes_received}};
}

Json machine_json(const MachineStats& s) {
  Json by_type = Json::object();
  for (const auto type : {MessageType::ZeroConverged, MessageType::ParentPair, MessageType::Done})
    by_type[std::string(to_string(type))] = traffic_json(s.of(type));
  return Json{{"rank", s.rank},
              {"traffic", by_type},
              {"bytes_sent", s.bytes_sent()},
              {"bytes_received", s.bytes_received()},
              {"frames_sent", s.frames_sent},
              {"frames_received", s.frames_received},
              {"edges_processed", s.edges_processed},
              {"messages_processed", s.messages_processed},
              {"timestamps", {{"T1", s.at(Timestamp::T1)},
                              {"T2", s.at(Timestamp::T2)},
                              {"T3", s.at(Timestamp::T3)},
                              {"T4", s.at(Timestamp::T4)}}}};
}

}  // namespace

std::string to_json(const RunReport& r) {
  Json per_machine = Json::array();
  std::uint64_t sent = 0;
  std::uint64_t received = 0;
  std::uint64_t records = 0;
  for (const auto& s : r.per_machine) {
    per_machine.push_back(machine_json(s));
    sent += s.bytes_sent();
    received += s.bytes_received();
    records += s.data_records_sent();
  }
  Json doc{{"algorithm", r.algorithm},
           {"graph", {{"path", r.graph_path}, {"n", r.n}, {"m", r.m}}},
           {"machines", r.machines},
           {"workers", r.workers},
           {"buffer_capacity", r.buffer_capacity},
           {"seed", r.seed},
           {"root_function", r.root_function},
           {"id_width", r.id_width},
           {"per_machine", per_machine},
           {"totals", {{"data_records_sent", records}, {"bytes_sent", sent}, {"bytes_received", received}}},
           {"component_count", r.component_count},
           {"largest_component_size", r.largest_component_size},
           {"labels_hash", r.labels_hash},
           {"verified", r.verified ? Json(*r.verified) : Json(nullptr)},
           {"wall_time_seconds", r.wall_time_seconds}};
  return doc.dump(2) + "\n";
}

}  // namespace ccdist::cli
