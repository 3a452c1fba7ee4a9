#pragma once

// The reading-of-numerals probe: mutate one numeral per Supported claim in 17
// controlled ways (small inaccuracies, roundings, approximators, cardinal
// bounds) and measure how often the Supported verdict survives each class of
// mutation.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "veritab/dataset.hpp"
#include "veritab/natlog.hpp"
#include "veritab/num.hpp"
#include "veritab/tables.hpp"

namespace veritab {

enum class RoundnessBase { Ten, Five, TwoFive };

Num roundness_base_value(RoundnessBase base);  // mantissa base: 1, 5 or 5/2

// Nearest member of {k * b * 10^y : k integer in 1..9, candidate integral} to
// x (x > 0, std::invalid_argument otherwise); ties break toward the smaller
// candidate.
Num round_to_class(const Num& x, RoundnessBase base);

// Location of the numeral a claim gets probed on: the first number token that
// is not a bare four-digit year.
struct NumeralSite {
  size_t begin = 0, end = 0;  // char range of the token within the claim
  NumberToken token;
};

bool is_date_token(const NumberToken& token, const std::string& surface);
std::optional<NumeralSite> find_probe_numeral(const std::string& claim);

// Supported records that carry a probe-eligible numeral.
std::vector<ClaimRecord> select_base_claims(const std::vector<ClaimRecord>& records);

struct Variation {
  int kind = 0;  // 1..17
  std::string class_name;
  std::string mutated_span;
  std::string mutated_claim;
  Num mutated_value;
};

// The ordered reporting classes with their kind subsets.
const std::vector<std::pair<std::string, std::vector<int>>>& probe_classes();
std::string probe_class_name(int kind);

// Exactly 17 mutations of the numeral at `site` in `claim`. Value mutations
// keep the original surface formatting (thousands separators, percent sign);
// non-integral results are rendered with two decimals.
std::vector<Variation> generate_variations(const std::string& claim, const NumeralSite& site);

struct ProbeInstance {
  std::string id;       // base id, or "<base id>#<kind>" for mutations
  std::string base_id;
  int kind = 0;         // 0 marks the unmodified original
  std::string class_name;
  std::string claim;
  std::vector<Table> tables;
};

// 18 instances per base claim: the original plus its 17 variations.
std::vector<ProbeInstance> build_probe(const std::vector<ClaimRecord>& base_claims);

nlohmann::json probe_instance_to_json(const ProbeInstance& instance);
ProbeInstance probe_instance_from_json(const nlohmann::json& j);

struct ProbeScore {
  size_t supported_bases = 0;  // the shared denominator
  std::map<int, double> kind_retention;
  std::map<std::string, double> class_retention;
  bool defined = false;  // false when no base claim was predicted Supported
};

// Retention per kind: of the base claims predicted Supported, the fraction
// whose mutation of that kind is still predicted Supported. Classes average
// their kinds. Instances without a prediction count as not retained.
ProbeScore score_probe(const std::vector<ProbeInstance>& instances,
                       const std::map<std::string, Verdict>& predictions);

}  // namespace veritab
