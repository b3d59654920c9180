#include "starsat/certificate_json.hpp"

#include <charconv>
#include <cstdio>

#include "starsat/error.hpp"

namespace starsat {

std::string hash_hex(std::uint64_t h) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t parse_hash_hex(const std::string& s) {
  std::uint64_t h = 0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) begin += 2;
  auto [ptr, ec] = std::from_chars(begin, end, h, 16);
  if (ec != std::errc{} || ptr != end || begin == end) throw ParseError(0, "malformed host_hash \"" + s + "\"");
  return h;
}

nlohmann::json certificate_to_json(const SaturationCertificate& cert) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : cert.edges) edges.push_back({e.u, e.v});
  nlohmann::json j{{"n", cert.n},
                   {"r", cert.r},
                   {"host_hash", hash_hex(cert.host_hash)},
                   {"edges", std::move(edges)},
                   {"verdict", std::string(to_string(cert.verdict))}};
  if (cert.offending_edge) j["offending_edge"] = {cert.offending_edge->u, cert.offending_edge->v};
  if (cert.offending_vertex) j["offending_vertex"] = *cert.offending_vertex;
  return j;
}

SaturationCertificate certificate_from_json(const nlohmann::json& j) {
  try {
    SaturationCertificate cert;
    cert.n = j.at("n").get<Vertex>();
    cert.r = j.at("r").get<int>();
    cert.host_hash = parse_hash_hex(j.at("host_hash").get<std::string>());
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError(0, "certificate edges must be [u, v] pairs");
      cert.edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    if (j.contains("verdict")) {
      auto v = verdict_from_string(j.at("verdict").get<std::string>());
      if (!v) throw ParseError(0, "unknown verdict");
      cert.verdict = *v;
    }
    if (j.contains("offending_edge")) {
      const auto& e = j.at("offending_edge");
      if (!e.is_array() || e.size() != 2) throw ParseError(0, "offending_edge must be a [u, v] pair");
      cert.offending_edge = Edge(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    if (j.contains("offending_vertex")) cert.offending_vertex = j.at("offending_vertex").get<Vertex>();
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed certificate: ") + e.what());
  }
}

nlohmann::json witness_to_json(const KIndependentWitness& w) {
  return {{"k", w.k}, {"size", w.size()}, {"vertices", w.vertices}};
}

}  // namespace starsat
