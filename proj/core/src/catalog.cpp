#include "acute/catalog.hpp"

#include <stdexcept>

#include "acute/io.hpp"

namespace acute {

namespace {

// d=1 and d=2 are elementary. The d=3..5 entries were produced by
// search_acute and certified by the exact verifier before shipping; the
// generating commands are in the README. The same JSON is shipped under
// data/ and checked against these strings at test time.

constexpr const char* kCatalogD1 = R"json({
 "dim": 1,
 "points": [
  [
   "0/1"
  ],
  [
   "1/1"
  ]
 ],
 "meta": {
  "source": "catalog",
  "id": "d1",
  "format_version": 1,
  "target_size": 2,
  "certificate": {
   "verdict": "acute",
   "s_min": "1/1",
   "witness": [
    0,
    1,
    1
   ],
   "min_angle_deg": null,
   "mode": "exact",
   "tolerance": null,
   "n": 2,
   "dim": 1,
   "elapsed_ms": 0.0
  }
 }
}
)json";

constexpr const char* kCatalogD2 = R"json({
 "dim": 2,
 "points": [
  [
   "0/1",
   "0/1"
  ],
  [
   "2/1",
   "0/1"
  ],
  [
   "1/1",
   "2/1"
  ]
 ],
 "meta": {
  "source": "catalog",
  "id": "d2",
  "format_version": 1,
  "target_size": 3,
  "certificate": {
   "verdict": "acute",
   "s_min": "2/1",
   "witness": [
    0,
    1,
    2
   ],
   "min_angle_deg": 53.130102354155994,
   "mode": "exact",
   "tolerance": null,
   "n": 3,
   "dim": 2,
   "elapsed_ms": 0.0
  }
 }
}
)json";

constexpr const char* kCatalogD3 = R"json({
 "dim": 3,
 "points": [
  [
   "1/1",
   "3/11",
   "-1/8"
  ],
  [
   "-4/17",
   "7/8",
   "-1/8"
  ],
  [
   "-7/17",
   "0/1",
   "19/20"
  ],
  [
   "4/17",
   "-7/8",
   "1/8"
  ],
  [
   "-10/17",
   "-5/17",
   "-5/6"
  ]
 ],
 "meta": {
  "source": "catalog",
  "id": "d3",
  "format_version": 1,
  "target_size": 5,
  "certificate": {
   "verdict": "acute",
   "s_min": "54433/231200",
   "witness": [
    2,
    1,
    3
   ],
   "min_angle_deg": 47.800672502845906,
   "mode": "exact",
   "tolerance": null,
   "n": 5,
   "dim": 3,
   "elapsed_ms": 0.0
  }
 }
}
)json";

constexpr const char* kCatalogD4 = R"json({
 "dim": 4,
 "points": [
  [
   "37/41",
   "9/43",
   "-13/36",
   "3/47"
  ],
  [
   "-9/38",
   "28/31",
   "1/3",
   "-2/23"
  ],
  [
   "4/27",
   "-4/45",
   "16/17",
   "6/47"
  ],
  [
   "-12/41",
   "-8/43",
   "-1/12",
   "33/34"
  ],
  [
   "22/29",
   "-5/12",
   "1/8",
   "-24/49"
  ],
  [
   "-19/34",
   "9/25",
   "0/1",
   "-37/49"
  ],
  [
   "-25/46",
   "-39/47",
   "0/1",
   "13/47"
  ],
  [
   "-7/40",
   "2/39",
   "-33/35",
   "-5/48"
  ]
 ],
 "meta": {
  "source": "catalog",
  "id": "d4",
  "format_version": 1,
  "target_size": 8,
  "certificate": {
   "verdict": "acute",
   "s_min": "453667323598403/11575612871013184",
   "witness": [
    4,
    0,
    6
   ],
   "min_angle_deg": 32.26072722064984,
   "mode": "exact",
   "tolerance": null,
   "n": 8,
   "dim": 4,
   "elapsed_ms": 0.0
  }
 }
}
)json";

constexpr const char* kCatalogD5 = R"json({
 "dim": 5,
 "points": [
  [
   "8351/9064",
   "-261/9769",
   "-326/2103",
   "-4420/9827",
   "768/7507"
  ],
  [
   "-233/633",
   "2849/3361",
   "-597/2690",
   "-3102/8675",
   "1741/7185"
  ],
  [
   "-501/4240",
   "-1123/6655",
   "3837/4591",
   "-564/9883",
   "882/2171"
  ],
  [
   "1408/7737",
   "454/5671",
   "-275/879",
   "6387/7246",
   "3342/7957"
  ],
  [
   "-2321/7104",
   "-347/6793",
   "-1434/8045",
   "-5/181",
   "7303/8314"
  ],
  [
   "-6334/9093",
   "3749/9896",
   "792/1505",
   "-1358/4917",
   "-1300/3937"
  ],
  [
   "-452/1417",
   "-1603/3160",
   "-512/3837",
   "6901/8985",
   "-3413/9991"
  ],
  [
   "2270/8107",
   "-3165/4108",
   "2858/9603",
   "-3123/5545",
   "-868/9091"
  ],
  [
   "-394/965",
   "-6182/9871",
   "-5041/9231",
   "-562/2373",
   "-70/5581"
  ],
  [
   "313/4906",
   "1156/5143",
   "1253/8521",
   "1496/6031",
   "-8767/9959"
  ],
  [
   "2597/4035",
   "3055/8597",
   "4321/9009",
   "2449/6513",
   "141/4046"
  ],
  [
   "1160/7941",
   "1323/5014",
   "-393/532",
   "-1129/3698",
   "-4103/9677"
  ]
 ],
 "meta": {
  "source": "catalog",
  "id": "d5",
  "format_version": 1,
  "target_size": 12,
  "certificate": {
   "verdict": "acute",
   "s_min": "19782222730618922035080569817432194543094726214549809333166787/263867203775645411259479561881175164729893826741411252686341760",
   "witness": [
    6,
    4,
    9
   ],
   "min_angle_deg": 36.3202955416829,
   "mode": "exact",
   "tolerance": null,
   "n": 12,
   "dim": 5,
   "elapsed_ms": 0.0
  }
 }
}
)json";

struct RawEntry {
  const char* id;
  std::size_t dim;
  std::size_t size;
  const char* text;
};

constexpr RawEntry kRaw[] = {
    {"d1", 1, 2, kCatalogD1},
    {"d2", 2, 3, kCatalogD2},
    {"d3", 3, 5, kCatalogD3},
    {"d4", 4, 8, kCatalogD4},
    {"d5", 5, 12, kCatalogD5},
};

CatalogEntry load(const RawEntry& raw) {
  if (raw.text == nullptr)
    throw std::runtime_error("catalog entry " + std::string(raw.id) +
                             " is not shipped in this build");
  PointSetFile f = read_pointset_json(raw.text);
  if (!f.certificate || !f.certificate->s_min || !f.certificate->witness)
    throw std::runtime_error("catalog entry " + std::string(raw.id) +
                             ": missing exact certificate");
  if (f.points.dim != raw.dim || f.points.size() != raw.size)
    throw std::runtime_error("catalog entry " + std::string(raw.id) +
                             ": unexpected dimension or size");

  // never trust the stored certificate blindly
  const VerificationReport fresh = verify_acute(f.points, VerifyMode::exact);
  const bool match = fresh.verdict == Verdict::acute &&
                     fresh.verdict == f.certificate->verdict &&
                     fresh.s_min == f.certificate->s_min &&
                     fresh.witness == f.certificate->witness;
  if (!match)
    throw std::runtime_error("catalog entry " + std::string(raw.id) +
                             ": certificate mismatch (corrupt data)");

  CatalogEntry e;
  e.id = raw.id;
  e.dim = f.points.dim;
  e.target_size = f.target_size.value_or(raw.size);
  e.points = std::move(f.points);
  e.certificate = fresh;
  return e;
}

}  // namespace

CatalogEntry base_set(std::size_t d) {
  if (d < 1 || d > 5)
    throw std::invalid_argument("base_set: d must be in 1..5, got " + std::to_string(d));
  return load(kRaw[d - 1]);
}

CatalogEntry base_set_by_id(const std::string& id) {
  for (const auto& raw : kRaw)
    if (id == raw.id) return load(raw);
  throw std::invalid_argument("base_set: unknown catalog id \"" + id + "\"");
}

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = {"d1", "d2", "d3", "d4", "d5"};
  return ids;
}

}  // namespace acute
