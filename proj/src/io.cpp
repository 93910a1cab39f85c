#include "rifle/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rifle/errors.hpp"

namespace rifle {

namespace {

std::vector<std::uint8_t> parse_flags(std::istringstream& ss, int n, int line,
                                      const char* what) {
  std::vector<std::uint8_t> flags(n);
  for (int k = 0; k < n; ++k) {
    int f;
    if (!(ss >> f) || (f != 0 && f != 1))
      throw ParseError(line, std::string(what) + " expects " + std::to_string(n) +
                                 " 0/1 flags");
    flags[k] = static_cast<std::uint8_t>(f);
  }
  return flags;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  int n = -1;
  std::vector<std::uint8_t> rigid_p, rigid_q;
  std::vector<Value> beta, gamma;
  std::vector<std::uint8_t> seen;
  bool have_rp = false, have_rq = false;
  int line_no = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string keyword;
    if (!(ss >> keyword)) continue;  // blank or comment-only line

    if (keyword == "n") {
      if (n >= 0) throw ParseError(line_no, "duplicate n line");
      if (!(ss >> n) || n < 0) throw ParseError(line_no, "n expects a nonnegative integer");
      const auto nn = static_cast<std::size_t>(n) * n;
      beta.assign(nn, 0);
      gamma.assign(nn, 0);
      seen.assign(nn, 0);
    } else if (keyword == "rigidP" || keyword == "rigidQ") {
      if (n < 0) throw ParseError(line_no, keyword + " before the n line");
      auto flags = parse_flags(ss, n, line_no, keyword.c_str());
      if (keyword == "rigidP") {
        if (have_rp) throw ParseError(line_no, "duplicate rigidP line");
        rigid_p = std::move(flags);
        have_rp = true;
      } else {
        if (have_rq) throw ParseError(line_no, "duplicate rigidQ line");
        rigid_q = std::move(flags);
        have_rq = true;
      }
    } else if (keyword == "pair") {
      if (n < 0) throw ParseError(line_no, "pair before the n line");
      long long i, j, b, g;
      if (!(ss >> i >> j >> b >> g))
        throw ParseError(line_no, "pair expects: pair <i> <j> <beta> <gamma>");
      if (i < 1 || i > n || j < 1 || j > n)
        throw ParseError(line_no, "pair index out of range");
      if (b < 0 || g < 0) throw ParseError(line_no, "pair values must be nonnegative");
      const auto k = static_cast<std::size_t>(i - 1) * n + (j - 1);
      if (seen[k]) throw ParseError(line_no, "duplicate pair line");
      seen[k] = 1;
      beta[k] = b;
      gamma[k] = g;
    } else {
      throw ParseError(line_no, "unknown keyword '" + keyword + "'");
    }
    std::string trailing;
    if (ss >> trailing) throw ParseError(line_no, "trailing tokens");
  }

  if (n < 0) throw ParseError(line_no, "missing n line");
  if (!have_rp) throw ParseError(line_no, "missing rigidP line");
  if (!have_rq) throw ParseError(line_no, "missing rigidQ line");
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (!seen[k])
      throw ParseError(line_no, "missing pair line for (" +
                                    std::to_string(k / n + 1) + ", " +
                                    std::to_string(k % n + 1) + ")");
  return Instance(n, std::move(beta), std::move(gamma), std::move(rigid_p),
                  std::move(rigid_q));
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open instance file: " + path);
  return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  const int n = inst.n();
  out << "n " << n << "\n";
  out << "rigidP";
  for (int i = 0; i < n; ++i) out << ' ' << (inst.p_rigid(i) ? 1 : 0);
  out << "\nrigidQ";
  for (int j = 0; j < n; ++j) out << ' ' << (inst.q_rigid(j) ? 1 : 0);
  out << "\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out << "pair " << i + 1 << ' ' << j + 1 << ' ' << inst.beta(i, j) << ' '
          << inst.gamma(i, j) << "\n";
  return out.str();
}

std::string instance_digest(const Instance& inst) {
  const std::string text = serialize_instance(inst);
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << std::hex << hash;
  return out.str();
}

Outcome parse_outcome(std::istream& in, int n) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("outcome document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("matching") || !doc.contains("u") ||
      !doc.contains("v"))
    throw Error("outcome document needs matching, u and v fields");

  const auto& jm = doc["matching"];
  if (!jm.is_array() || jm.size() != static_cast<std::size_t>(n))
    throw Error("outcome matching must list " + std::to_string(n) + " Q-indices");
  std::vector<int> q_of_p(n);
  for (int i = 0; i < n; ++i) {
    const int q = jm[i].get<int>();
    if (q < 1 || q > n) throw Error("outcome matching index out of range");
    q_of_p[i] = q - 1;
  }

  const auto read_vec = [&](const char* key) {
    const auto& arr = doc[key];
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(n))
      throw Error(std::string("outcome ") + key + " must have length " +
                  std::to_string(n));
    std::vector<Value> v(n);
    for (int k = 0; k < n; ++k) v[k] = arr[k].get<Value>();
    return v;
  };

  Outcome o;
  try {
    o.matching = Matching(std::move(q_of_p));
  } catch (const std::invalid_argument& e) {
    throw Error(std::string("outcome matching: ") + e.what());
  }
  o.u = read_vec("u");
  o.v = read_vec("v");
  return o;
}

Outcome parse_outcome_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open outcome file: " + path);
  return parse_outcome(in, n);
}

}  // namespace rifle
