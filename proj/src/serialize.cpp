#include "symedge/serialize.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "symedge/errors.hpp"

namespace symedge {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json ideal_to_json(const MonomialIdeal& I) {
  ordered_json gens = ordered_json::array();
  for (const Monomial& g : I.generators()) gens.push_back(to_string(g));
  return gens;
}

MonomialIdeal ideal_from_json(const ordered_json& j, int ambient) {
  std::vector<Monomial> gens;
  for (const auto& item : j) {
    gens.push_back(parse_monomial(item.get<std::string>(), ambient));
  }
  return MonomialIdeal::from_generators(ambient, std::move(gens));
}

}  // namespace

std::string betti_to_json(const BettiTable& table) {
  ordered_json out;
  out["convention"] = to_string(table.convention());
  out["ambient"] = table.ambient();
  out["field"] = table.field().to_string();
  ordered_json entries = ordered_json::array();
  for (const auto& [key, value] : table.entries()) {
    ordered_json e;
    e["i"] = key.first;
    e["j"] = key.second;
    e["beta"] = value;
    entries.push_back(std::move(e));
  }
  out["entries"] = std::move(entries);
  return out.dump();
}

std::string betti_to_csv(const BettiTable& table) {
  std::ostringstream out;
  out << "i,j,beta\n";
  for (const auto& [key, value] : table.entries()) {
    out << key.first << ',' << key.second << ',' << value << '\n';
  }
  return out.str();
}

std::string betti_to_pretty(const BettiTable& table) {
  std::ostringstream out;
  out << "convention: " << to_string(table.convention())
      << "   field: " << table.field().to_string()
      << "   ambient: " << table.ambient() << '\n';
  if (table.empty()) {
    out << "(empty table)\n";
    return out.str();
  }
  const int max_i = table.max_homological_index();
  int min_d = 0, max_d = 0;
  bool first = true;
  for (const auto& [key, value] : table.entries()) {
    const int d = key.second - key.first;
    if (first) {
      min_d = max_d = d;
      first = false;
    } else {
      min_d = std::min(min_d, d);
      max_d = std::max(max_d, d);
    }
  }

  std::vector<long long> totals(max_i + 1, 0);
  for (const auto& [key, value] : table.entries()) totals[key.first] += value;

  auto cell_width = [&](long long v) { return std::to_string(v).size(); };
  std::size_t width = 1;
  for (long long t : totals) width = std::max(width, cell_width(t));
  for (const auto& [key, value] : table.entries()) width = std::max(width, cell_width(value));
  std::size_t label = std::max<std::size_t>(
      {std::to_string(min_d).size(), std::to_string(max_d).size(), 5});

  auto pad = [&](const std::string& s, std::size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };

  out << pad("", label) << " ";
  for (int i = 0; i <= max_i; ++i) out << ' ' << pad(std::to_string(i), width);
  out << '\n';
  for (int d = min_d; d <= max_d; ++d) {
    out << pad(std::to_string(d), label) << ":";
    for (int i = 0; i <= max_i; ++i) {
      const long long v = table.at(i, d + i);
      out << ' ' << pad(v == 0 ? "." : std::to_string(v), width);
    }
    out << '\n';
  }
  out << pad("total", label) << ":";
  for (int i = 0; i <= max_i; ++i) out << ' ' << pad(std::to_string(totals[i]), width);
  out << '\n';
  return out.str();
}

std::string certificate_to_json(const SplitCertificate& cert) {
  ordered_json out;
  out["ambient"] = cert.ideal.ambient();
  out["m"] = cert.m;
  out["r"] = cert.r;
  out["s"] = cert.s;
  out["ideal"] = ideal_to_json(cert.ideal);
  out["left"] = ideal_to_json(cert.left);
  out["right"] = ideal_to_json(cert.right);
  ordered_json map = ordered_json::array();
  for (const auto& entry : cert.map) {
    ordered_json e;
    e["w"] = to_string(entry.w);
    e["phi"] = to_string(entry.phi);
    e["phi_hat"] = to_string(entry.phi_hat);
    map.push_back(std::move(e));
  }
  out["map"] = std::move(map);
  return out.dump();
}

SplitCertificate certificate_from_json(const std::string& text) {
  ordered_json in;
  try {
    in = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate: bad JSON: ") + e.what());
  }
  try {
    const int ambient = in.at("ambient").get<int>();
    SplitCertificate cert{ideal_from_json(in.at("ideal"), ambient),
                          ideal_from_json(in.at("left"), ambient),
                          ideal_from_json(in.at("right"), ambient),
                          {},
                          in.value("m", 0),
                          in.value("r", 0),
                          in.value("s", 0)};
    for (const auto& e : in.at("map")) {
      cert.map.push_back(SplitMapEntry{
          parse_monomial(e.at("w").get<std::string>(), ambient),
          parse_monomial(e.at("phi").get<std::string>(), ambient),
          parse_monomial(e.at("phi_hat").get<std::string>(), ambient)});
    }
    std::sort(cert.map.begin(), cert.map.end(),
              [](const SplitMapEntry& a, const SplitMapEntry& b) { return a.w < b.w; });
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate: missing or bad field: ") + e.what());
  }
}

namespace {

ordered_json violation_to_json(const Violation& v) {
  ordered_json out;
  out["kind"] = to_string(v.kind);
  out["detail"] = v.detail;
  ordered_json witness = ordered_json::array();
  for (const Monomial& w : v.witness) witness.push_back(to_string(w));
  out["witness"] = std::move(witness);
  return out;
}

}  // namespace

std::string verify_report_to_json(const VerifyReport& report) {
  ordered_json out;
  out["valid"] = report.valid;
  out["exhaustive"] = report.exhaustive;
  out["subsets_checked"] = report.subsets_checked;
  out["violation_count"] = report.violation_count;
  ordered_json violations = ordered_json::array();
  for (const auto& v : report.violations) violations.push_back(violation_to_json(v));
  out["violations"] = std::move(violations);
  return out.dump();
}

std::string verify_report_to_pretty(const VerifyReport& report) {
  std::ostringstream out;
  out << (report.valid ? "valid" : "INVALID") << " ("
      << (report.exhaustive ? "exhaustive" : "sampled") << ", "
      << report.subsets_checked << " subsets checked)\n";
  for (const auto& v : report.violations) {
    out << "  violation [" << to_string(v.kind) << "] " << v.detail;
    if (!v.witness.empty()) {
      out << "  witness: {";
      for (std::size_t k = 0; k < v.witness.size(); ++k) {
        if (k) out << ", ";
        out << to_string(v.witness[k]);
      }
      out << '}';
    }
    out << '\n';
  }
  if (report.violation_count > report.violations.size()) {
    out << "  ... " << (report.violation_count - report.violations.size())
        << " further violations not shown\n";
  }
  return out.str();
}

std::string parallel_report_to_json(const ParallelBoundReport& report) {
  ordered_json out;
  ordered_json alpha = ordered_json::array();
  for (int a : report.alpha) alpha.push_back(a);
  out["alpha"] = std::move(alpha);
  out["alpha_product"] = report.alpha_product;
  out["proven_bound_holds"] = report.proven_all;
  out["conjectured_bound_holds"] = report.conjecture_all;
  ordered_json entries = ordered_json::array();
  for (const auto& e : report.entries) {
    ordered_json row;
    row["i"] = e.i;
    row["j"] = e.j;
    row["base"] = e.base_beta;
    row["parallelized"] = e.parallel_beta;
    row["proven"] = e.proven_holds;
    row["conjecture"] = e.conjecture_holds;
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  out["base_table"] = ordered_json::parse(betti_to_json(report.base));
  out["parallelized_table"] = ordered_json::parse(betti_to_json(report.parallelized));
  return out.dump();
}

std::string parallel_report_to_pretty(const ParallelBoundReport& report) {
  std::ostringstream out;
  out << "alpha = (";
  for (std::size_t k = 0; k < report.alpha.size(); ++k) {
    if (k) out << ",";
    out << report.alpha[k];
  }
  out << "), product = " << report.alpha_product << '\n';
  out << "entry   base  parallelized  beta(G^a) >= beta(G)  beta(G^a) >= prod*beta(G)\n";
  for (const auto& e : report.entries) {
    std::ostringstream key;
    key << "(" << e.i << "," << e.j << ")";
    out << key.str() << std::string(key.str().size() < 8 ? 8 - key.str().size() : 1, ' ')
        << e.base_beta << "     " << e.parallel_beta << "             "
        << (e.proven_holds ? "yes" : "NO") << "                   "
        << (e.conjecture_holds ? "yes" : "no") << '\n';
  }
  out << "proven bound: " << (report.proven_all ? "holds at every (i,j)" : "VIOLATED") << '\n';
  out << "conjectured bound (reported only): "
      << (report.conjecture_all ? "holds at every (i,j)" : "fails at some (i,j)") << '\n';
  return out.str();
}

}  // namespace symedge
