#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cohoparam/cohomology.hpp"
#include "cohoparam/packets.hpp"
#include "cohoparam/params.hpp"
#include "cohoparam/transfer.hpp"

namespace cohoparam {

using Json = nlohmann::ordered_json;

struct ParameterRecord {
  std::variant<GLParameter, ComplexParameter> param;
  std::vector<int> levi_subset;
  friend bool operator==(const ParameterRecord&, const ParameterRecord&) = default;
};

struct ParameterList {
  std::string group;
  HalfIntVector weight;
  std::vector<ParameterRecord> parameters;
  friend bool operator==(const ParameterList&, const ParameterList&) = default;
};

Json to_json(const ParameterList& list);
/// Inverse of to_json; fields other than atoms, twist, orbit, kind and
/// levi_subset are ignored. Throws InputError on malformed payloads.
ParameterList parameter_list_from_json(const Json& j);

Json to_json(const PacketDescriptor& p);
Json to_json(const TransferResult& r);
Json to_json(const PacketSum& s);
Json to_json(const CompactInnerForms& f);
Json to_json(const QuasiSplitInnerForms& f);
Json to_json(const CatalogEntry& c);

}  // namespace cohoparam
