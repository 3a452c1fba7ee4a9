#include "veritab/probe.hpp"

#include <cctype>
#include <stdexcept>

#include "veritab/numerals.hpp"
#include "veritab/textnorm.hpp"

namespace veritab {

Num roundness_base_value(RoundnessBase base) {
  // Mantissa bases: 10-ness candidates are k*10^y (so b = 1), 5-ness are
  // k*5*10^y, 2.5-ness are k*2.5*10^y restricted to integral values.
  switch (base) {
    case RoundnessBase::Ten: return Num(1);
    case RoundnessBase::Five: return Num(5);
    case RoundnessBase::TwoFive: return Num(mpq_class(5, 2));
  }
  return Num(1);
}

Num round_to_class(const Num& x, RoundnessBase base) {
  if (!(x > Num(0))) throw std::invalid_argument("round_to_class requires a positive value");
  Num b = roundness_base_value(base);
  Num best;
  bool have = false;
  Num scale(1);
  // Scales run until the smallest candidate of the magnitude clears x, so the
  // nearest member above x is always enumerated.
  while (true) {
    for (long long k = 1; k <= 9; ++k) {
      Num candidate = Num(k) * b * scale;
      if (!candidate.is_integer()) continue;
      if (!have || (candidate - x).abs() < (best - x).abs()) {
        best = candidate;
        have = true;
      }
    }
    if (b * scale > x) break;
    scale = scale * Num(10);
  }
  return best;
}

bool is_date_token(const NumberToken& token, const std::string& surface) {
  if (token.percent || token.plus_suffix || token.grouped || token.decimals > 0) return false;
  if (surface.size() != 4) return false;
  for (char c : surface)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return token.value >= Num(1000) && token.value <= Num(2100);
}

std::optional<NumeralSite> find_probe_numeral(const std::string& claim) {
  size_t i = 0;
  while (i < claim.size()) {
    while (i < claim.size() && std::isspace(static_cast<unsigned char>(claim[i]))) ++i;
    size_t start = i;
    while (i < claim.size() && !std::isspace(static_cast<unsigned char>(claim[i]))) ++i;
    if (i == start) break;
    size_t b = start, e = i;
    while (b < e && !std::isdigit(static_cast<unsigned char>(claim[b])) && claim[b] != '-' &&
           claim[b] != '+')
      ++b;
    while (e > b && !std::isdigit(static_cast<unsigned char>(claim[e - 1])) &&
           claim[e - 1] != '%' && claim[e - 1] != '+')
      --e;
    if (b >= e) continue;
    std::string surface = claim.substr(b, e - b);
    auto token = parse_number_token(surface);
    if (!token || is_date_token(*token, surface)) continue;
    if (!(token->value > Num(0))) continue;
    return NumeralSite{b, e, *token};
  }
  return std::nullopt;
}

std::vector<ClaimRecord> select_base_claims(const std::vector<ClaimRecord>& records) {
  std::vector<ClaimRecord> out;
  for (const ClaimRecord& record : records) {
    if (canonical_label(record.label) != "Supported") continue;
    if (!find_probe_numeral(record.claim)) continue;
    out.push_back(record);
  }
  return out;
}

const std::vector<std::pair<std::string, std::vector<int>>>& probe_classes() {
  static const std::vector<std::pair<std::string, std::vector<int>>> classes = {
      {"Inaccuracy +1", {1}},
      {"Inaccuracy 2%", {2, 3}},
      {"Inaccuracy 10%", {4, 5}},
      {"Inaccuracy 25%", {6, 7}},
      {"Rounding", {8, 9, 10}},
      {"Modifiers", {11, 12, 13}},
      {"Cardinal incorrect", {14, 15}},
      {"Cardinal correct", {16, 17}},
  };
  return classes;
}

std::string probe_class_name(int kind) {
  for (const auto& [name, kinds] : probe_classes())
    for (int k : kinds)
      if (k == kind) return name;
  return "";
}

namespace {

std::string render_mutated(const Num& v, const NumberToken& original) {
  std::string body =
      v.is_integer() ? v.render(original.grouped) : v.render_fixed(2, original.grouped);
  if (original.percent) body += "%";
  if (original.plus_suffix) body += "+";
  return body;
}

}  // namespace

std::vector<Variation> generate_variations(const std::string& claim, const NumeralSite& site) {
  const Num& x = site.token.value;
  Num r10 = round_to_class(x, RoundnessBase::Ten);
  Num r5 = round_to_class(x, RoundnessBase::Five);
  Num r25 = round_to_class(x, RoundnessBase::TwoFive);
  auto pct = [&](int percent) { return x * Num(mpq_class(100 + percent, 100)); };

  struct Mutation {
    Num value;
    std::string prefix;
  };
  std::vector<Mutation> mutations = {
      {x + Num(1), ""},          // 1
      {pct(2), ""},              // 2
      {pct(-2), ""},             // 3
      {pct(10), ""},             // 4
      {pct(-10), ""},            // 5
      {pct(25), ""},             // 6
      {pct(-25), ""},            // 7
      {r10, ""},                 // 8
      {r5, ""},                  // 9
      {r25, ""},                 // 10
      {r10, "About "},           // 11
      {r5, "Around "},           // 12
      {r25, "Approximately "},   // 13
      {pct(-10), "At most "},    // 14
      {pct(10), "At least "},    // 15
      {pct(10), "At most "},     // 16
      {pct(-10), "At least "},   // 17
  };

  std::vector<Variation> out;
  for (size_t i = 0; i < mutations.size(); ++i) {
    Variation v;
    v.kind = static_cast<int>(i) + 1;
    v.class_name = probe_class_name(v.kind);
    v.mutated_value = mutations[i].value;
    v.mutated_span = mutations[i].prefix + render_mutated(mutations[i].value, site.token);
    v.mutated_claim =
        claim.substr(0, site.begin) + v.mutated_span + claim.substr(site.end);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<ProbeInstance> build_probe(const std::vector<ClaimRecord>& base_claims) {
  std::vector<ProbeInstance> out;
  for (const ClaimRecord& record : base_claims) {
    auto site = find_probe_numeral(record.claim);
    if (!site) continue;
    ProbeInstance original;
    original.id = record.id;
    original.base_id = record.id;
    original.claim = record.claim;
    original.tables = record.tables;
    out.push_back(original);
    for (const Variation& v : generate_variations(record.claim, *site)) {
      ProbeInstance instance;
      instance.id = record.id + "#" + std::to_string(v.kind);
      instance.base_id = record.id;
      instance.kind = v.kind;
      instance.class_name = v.class_name;
      instance.claim = v.mutated_claim;
      instance.tables = record.tables;
      out.push_back(std::move(instance));
    }
  }
  return out;
}

nlohmann::json probe_instance_to_json(const ProbeInstance& instance) {
  return {{"id", instance.id},       {"base_id", instance.base_id},
          {"kind", instance.kind},   {"class", instance.class_name},
          {"claim", instance.claim}, {"tables", tables_to_json(instance.tables)}};
}

ProbeInstance probe_instance_from_json(const nlohmann::json& j) {
  ProbeInstance instance;
  instance.id = j.at("id").get<std::string>();
  instance.base_id = j.at("base_id").get<std::string>();
  instance.kind = j.value("kind", 0);
  instance.class_name = j.value("class", std::string{});
  instance.claim = j.at("claim").get<std::string>();
  if (j.contains("tables") && !j["tables"].empty())
    instance.tables = tables_from_json(j["tables"]);
  return instance;
}

ProbeScore score_probe(const std::vector<ProbeInstance>& instances,
                       const std::map<std::string, Verdict>& predictions) {
  ProbeScore score;
  std::set<std::string> supported_bases;
  for (const ProbeInstance& instance : instances) {
    if (instance.kind != 0) continue;
    auto it = predictions.find(instance.id);
    if (it != predictions.end() && it->second == Verdict::Supported)
      supported_bases.insert(instance.base_id);
  }
  score.supported_bases = supported_bases.size();
  if (supported_bases.empty()) return score;
  score.defined = true;

  std::map<int, size_t> retained;
  for (const ProbeInstance& instance : instances) {
    if (instance.kind == 0 || !supported_bases.count(instance.base_id)) continue;
    auto it = predictions.find(instance.id);
    if (it != predictions.end() && it->second == Verdict::Supported) ++retained[instance.kind];
  }
  for (int kind = 1; kind <= 17; ++kind)
    score.kind_retention[kind] =
        static_cast<double>(retained[kind]) / supported_bases.size();
  for (const auto& [name, kinds] : probe_classes()) {
    double sum = 0.0;
    for (int k : kinds) sum += score.kind_retention[k];
    score.class_retention[name] = sum / kinds.size();
  }
  return score;
}

}  // namespace veritab
