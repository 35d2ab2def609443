#include "newtonlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "newtonlab/nonneg.hpp"

namespace nl {

using json = nlohmann::ordered_json;

namespace {

std::string where(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Int to_int(const json& x, const std::string& ctx) {
  if (x.is_number_integer()) return Int(x.get<long>());
  if (x.is_string()) {
    Int v;
    if (v.set_str(x.get<std::string>(), 10) == 0) return v;
  }
  throw InputError(ctx + ": expected an integer");
}

// A constraint violation inside a point list, located later in the text.
struct FieldError {
  std::string key;
  std::vector<std::size_t> path;
  std::string msg;
};

std::string path_name(const std::string& key, const std::vector<std::size_t>& path) {
  std::string s = key;
  for (auto i : path) s += "[" + std::to_string(i) + "]";
  return s;
}

// Byte offset of text[key][path...]; npos when the scan gets lost.
std::size_t locate(const std::string& t, const std::string& key, const std::vector<std::size_t>& path) {
  constexpr auto npos = std::string::npos;
  const std::string quoted = "\"" + key + "\"";
  std::size_t pos = npos;
  int depth = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    char c = t[i];
    if (c == '"') {
      if (depth == 1 && t.compare(i, quoted.size(), quoted) == 0) {
        pos = i + quoted.size();
        break;
      }
      i = t.find('"', i + 1);
      if (i == npos) return npos;
    } else if (c == '{' || c == '[') {
      ++depth;
    } else if (c == '}' || c == ']') {
      --depth;
    }
  }
  if (pos == npos || (pos = t.find(':', pos)) == npos) return npos;
  auto skip = [&](std::size_t i) { return t.find_first_not_of(" \t\r\n", i); };
  for (auto want : path) {
    pos = skip(pos + 1);
    if (pos == npos || t[pos] != '[') return npos;
    std::size_t k = 0;
    int d = 0;
    std::size_t i = pos + 1;
    for (; i < t.size() && k < want; ++i) {
      if (t[i] == '[' || t[i] == '{') ++d;
      else if (t[i] == ']' || t[i] == '}') {
        if (d-- == 0) return npos;
      } else if (t[i] == ',' && d == 0) {
        ++k;
      }
    }
    pos = i - 1;
  }
  return skip(pos + 1);
}

std::vector<IVec> points(const json& arr, std::size_t len, std::size_t nonneg, const std::string& key,
                         std::vector<std::size_t> path = {}) {
  if (!arr.is_array()) throw FieldError{key, path, "expected an array of points"};
  std::vector<IVec> out;
  path.push_back(0);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& p = arr[i];
    path.back() = i;
    if (!p.is_array() || p.size() != len)
      throw FieldError{key, path, "expected " + std::to_string(len) + " coordinates"};
    IVec v;
    for (std::size_t j = 0; j < len; ++j) {
      try {
        v.push_back(to_int(p[j], ""));
      } catch (const InputError&) {
        throw FieldError{key, path, "expected integers"};
      }
      if (j < nonneg && v.back() < 0) throw FieldError{key, path, "negative coordinate"};
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::string located(const std::string& text, const FieldError& e) {
  std::string head = path_name(e.key, e.path) + ": " + e.msg;
  std::size_t at = locate(text, e.key, e.path);
  return at == std::string::npos ? head : where(text, at) + ": " + head;
}

json point_json(const IVec& p) {
  json a = json::array();
  for (const auto& x : p) {
    if (x.fits_slong_p()) a.push_back(x.get_si());
    else a.push_back(x.get_str());
  }
  return a;
}

json points_json(const std::vector<IVec>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(point_json(p));
  return a;
}

json int_json(const Int& x) { return x.fits_slong_p() ? json(x.get_si()) : json(x.get_str()); }

std::vector<std::pair<std::string, Int>> pairs(const json& o, const std::string& ctx) {
  std::vector<std::pair<std::string, Int>> out;
  for (auto it = o.begin(); it != o.end(); ++it) out.emplace_back(it.key(), to_int(it.value(), ctx + "." + it.key()));
  return out;
}

ExtRat canonical_ext(const std::string& s) {
  ExtRat x = parse_ext(s);
  if (to_string(x) != s) throw InputError("non-canonical number '" + s + "'");
  return x;
}

}  // namespace

std::vector<IVec> Instance::lifted() const {
  if (h) return *h;
  if (f && g) return build_H(*f, *g);
  throw InputError("instance needs either h or both f and g");
}

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // drop the library's own prefix and location
    std::string m = e.what();
    auto k = m.find(": ", m.find("column"));
    if (k != std::string::npos) m = m.substr(k + 2);
    throw InputError("malformed JSON at " + where(text, e.byte) + ": " + m);
  }
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  Instance in;
  if (!j.contains("dim")) throw InputError("missing field 'dim'");
  Int d = to_int(j["dim"], "dim");
  if (d <= 0 || d > 30) throw InputError("dim must be a positive integer");
  in.dim = d.get_ui();
  const std::size_t n = in.dim;
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& k = it.key();
      if (k == "dim" || k == "comment") continue;
      if (k == "f") in.f = points(*it, n, n, "f");
      else if (k == "g") in.g = points(*it, n, n, "g");
      else if (k == "h") in.h = points(*it, n + 1, n, "h");
      else if (k == "parent") in.parent = points(*it, n, 0, "parent");
      else if (k == "polytopes" || k == "daughters") {
        if (!it->is_array()) throw FieldError{k, {}, "expected an array of point lists"};
        for (std::size_t i = 0; i < it->size(); ++i)
          (k == "polytopes" ? in.polytopes : in.daughters).push_back(points((*it)[i], n, 0, k, {i}));
      } else {
        throw InputError("unknown field '" + k + "'");
      }
    }
    if (in.h && (in.f || in.g)) throw InputError("give either h or f/g, not both");
    if (in.g && !in.f) throw InputError("g given without f");
    if (in.f && in.g && !in.f->empty() && !in.g->empty()) {
      // g is the full support of the perturbation
      NewtonPolyhedron ng(*in.g);
      for (std::size_t i = 0; i < in.f->size(); ++i)
        if (!ng.contains((*in.f)[i]))
          throw FieldError{"f", {i}, to_string((*in.f)[i]) + " lies outside the Newton polyhedron of g"};
    }
  } catch (const FieldError& e) {
    throw InputError(located(text, e));
  }
  return in;
}

Instance load_instance(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << is.rdbuf();
  try {
    return parse_instance(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string serialize_instance(const Instance& in) {
  json j;
  j["dim"] = in.dim;
  if (in.f) j["f"] = points_json(*in.f);
  if (in.g) j["g"] = points_json(*in.g);
  if (in.h) j["h"] = points_json(*in.h);
  if (!in.polytopes.empty()) {
    j["polytopes"] = json::array();
    for (const auto& p : in.polytopes) j["polytopes"].push_back(points_json(p));
  }
  if (in.parent) j["parent"] = points_json(*in.parent);
  if (!in.daughters.empty()) {
    j["daughters"] = json::array();
    for (const auto& p : in.daughters) j["daughters"].push_back(points_json(p));
  }
  return j.dump(2) + "\n";
}

std::string to_json(const ResultFile& r) {
  json j;
  j["command"] = r.command;
  j["source"] = r.source;
  j["status"] = r.status;
  j["records"] = json::array();
  for (const auto& rec : r.records) {
    json o;
    o["label"] = rec.label;
    if (rec.covector) {
      json c = json::array();
      for (const auto& x : *rec.covector) c.push_back(to_string(x));
      o["covector"] = c;
    }
    if (!rec.points.empty()) o["points"] = points_json(rec.points);
    json v = json::object();
    for (const auto& [k, x] : rec.values) v[k] = int_json(x);
    o["values"] = v;
    j["records"].push_back(o);
  }
  json t = json::object();
  for (const auto& [k, x] : r.totals) t[k] = int_json(x);
  j["totals"] = t;
  if (r.check) {
    json c;
    c["kind"] = r.check->kind;
    json v = json::object();
    for (const auto& [k, x] : r.check->values) v[k] = int_json(x);
    c["values"] = v;
    c["match"] = r.check->match;
    j["check"] = c;
  }
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

ResultFile parse_result(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed result at " + where(text, e.byte) + ": " + e.what());
  }
  ResultFile r;
  try {
    r.command = j.at("command").get<std::string>();
    r.source = j.at("source").get<std::string>();
    r.status = j.at("status").get<std::string>();
    for (const auto& o : j.at("records")) {
      ResultRecord rec;
      rec.label = o.at("label").get<std::string>();
      if (o.contains("covector")) {
        ExtCovector c;
        for (const auto& x : o["covector"]) c.push_back(canonical_ext(x.get<std::string>()));
        rec.covector = c;
      }
      if (o.contains("points")) {
        const auto& ps = o["points"];
        std::size_t len = ps.empty() ? 0 : ps[0].size();
        rec.points = points(ps, len, 0, "points");
      }
      rec.values = pairs(o.at("values"), "values");
      r.records.push_back(std::move(rec));
    }
    r.totals = pairs(j.at("totals"), "totals");
    if (j.contains("check")) {
      ResultCheck c;
      c.kind = j["check"].at("kind").get<std::string>();
      c.values = pairs(j["check"].at("values"), "check");
      c.match = j["check"].at("match").get<bool>();
      r.check = c;
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad result file: ") + e.what());
  }
  return r;
}

namespace {

// Display width of a UTF-8 string (code points).
std::size_t width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, width(s)), ' '); }

}  // namespace

std::string to_table(const ResultFile& r) {
  std::ostringstream os;
  os << r.command << "  " << r.source;
  if (!r.status.empty()) os << "  [" << r.status << "]";
  os << "\n";
  if (!r.records.empty()) {
    std::vector<std::string> head{"label"};
    bool cov = std::any_of(r.records.begin(), r.records.end(), [](const auto& x) { return x.covector.has_value(); });
    bool pts = std::any_of(r.records.begin(), r.records.end(), [](const auto& x) { return !x.points.empty(); });
    if (cov) head.push_back("covector");
    if (pts) head.push_back("points");
    std::vector<std::string> keys;
    for (const auto& rec : r.records)
      for (const auto& [k, v] : rec.values)
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    head.insert(head.end(), keys.begin(), keys.end());
    std::vector<std::vector<std::string>> rows;
    for (const auto& rec : r.records) {
      std::vector<std::string> row{rec.label};
      if (cov) row.push_back(rec.covector ? to_string(*rec.covector) : "");
      if (pts) {
        std::string s;
        for (const auto& p : rec.points) s += to_string(p);
        row.push_back(s);
      }
      for (const auto& k : keys) {
        auto it = std::find_if(rec.values.begin(), rec.values.end(), [&](const auto& kv) { return kv.first == k; });
        row.push_back(it == rec.values.end() ? "" : it->second.get_str());
      }
      rows.push_back(std::move(row));
    }
    std::vector<std::size_t> w(head.size());
    for (std::size_t c = 0; c < head.size(); ++c) {
      w[c] = width(head[c]);
      for (const auto& row : rows) w[c] = std::max(w[c], width(row[c]));
    }
    auto line = [&](const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "  " : "") << pad(row[c], w[c]);
      os << "\n";
    };
    line(head);
    for (const auto& row : rows) line(row);
  }
  for (const auto& [k, v] : r.totals) os << k << ": " << v.get_str() << "\n";
  if (r.check) {
    os << r.check->kind << ":";
    for (const auto& [k, v] : r.check->values) os << " " << k << "=" << v.get_str();
    os << (r.check->match ? "  verified" : "  MISMATCH") << "\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

ResultRecord record_row(const AsymptoticRecord& a) {
  ResultRecord r;
  r.label = to_string(a.cls);
  r.covector = a.covector;
  r.values = {{"multiplicity", a.multiplicity}};
  return r;
}

}  // namespace nl
