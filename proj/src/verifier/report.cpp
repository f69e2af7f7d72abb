#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "defring/verifier.hpp"

namespace defring::verifier {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skip: return "skip";
  }
  return "?";
}

std::size_t Report::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.verdict == v;
  return n;
}

void Report::append(std::vector<Entry> more) {
  for (auto& e : more) entries.push_back(std::move(e));
}

std::string Report::json() const {
  using nlohmann::ordered_json;
  ordered_json list = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : e.params) params[k] = v;
    ordered_json j;
    j["id"] = e.id;
    j["anchor"] = e.anchor;
    j["params"] = params;
    j["verdict"] = verdict_name(e.verdict);
    if (!e.detail.empty()) j[e.verdict == Verdict::skip ? "reason" : "detail"] = e.detail;
    list.push_back(std::move(j));
  }
  return list.dump(2) + "\n";
}

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string case_name(const Entry& e) {
  std::string name = e.anchor;
  if (!e.params.empty()) {
    name += " [";
    for (std::size_t i = 0; i < e.params.size(); ++i)
      name += (i ? ", " : "") + e.params[i].first + "=" + e.params[i].second;
    name += "]";
  }
  return name;
}

}  // namespace

std::string Report::junit(const std::string& suite, const std::map<std::string, double>& seconds) const {
  std::map<std::string, std::vector<const Entry*>> by_id;
  for (const auto& e : entries) by_id[e.id].push_back(&e);
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<testsuites name=\"" << xml_escape(suite) << "\" tests=\"" << entries.size() << "\" failures=\""
     << count(Verdict::fail) << "\" skipped=\"" << count(Verdict::skip) << "\">\n";
  for (const auto& [id, list] : by_id) {
    std::size_t fails = 0, skips = 0;
    for (const Entry* e : list) {
      fails += e->verdict == Verdict::fail;
      skips += e->verdict == Verdict::skip;
    }
    auto t = seconds.find(id);
    os << "  <testsuite name=\"" << xml_escape(id) << "\" tests=\"" << list.size() << "\" failures=\"" << fails
       << "\" skipped=\"" << skips << "\" time=\"" << (t == seconds.end() ? 0.0 : t->second) << "\">\n";
    for (const Entry* e : list) {
      os << "    <testcase classname=\"" << xml_escape(id) << "\" name=\"" << xml_escape(case_name(*e)) << "\"";
      if (e->verdict == Verdict::pass) {
        os << "/>\n";
        continue;
      }
      os << ">\n";
      if (e->verdict == Verdict::fail)
        os << "      <failure message=\"" << xml_escape(e->detail) << "\"/>\n";
      else
        os << "      <skipped message=\"" << xml_escape(e->detail) << "\"/>\n";
      os << "    </testcase>\n";
    }
    os << "  </testsuite>\n";
  }
  os << "</testsuites>\n";
  return os.str();
}

}  // namespace defring::verifier
