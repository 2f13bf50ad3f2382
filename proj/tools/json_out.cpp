#include "json_out.hpp"

#include <sstream>

namespace ratknot::cli {

namespace {

ordered_json word_json(const ConwayWord& w) {
  ordered_json a = ordered_json::array();
  for (auto& e : w.entries()) a.push_back(number(e));
  return a;
}

template <class Map>
ordered_json int_map(const Map& m) {
  ordered_json o = ordered_json::object();
  for (auto& [k, v] : m) o[std::to_string(k)] = number(v);
  return o;
}

}  // namespace

ordered_json number(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

ordered_json number(const Rational& v) {
  if (v.get_den() == 1) return number(Integer(v.get_num()));
  return v.get_str();
}

ordered_json to_json(const KnotClass& knot, const InvariantSet& inv) {
  ordered_json j;
  j["schubert"] = {{"p", number(knot.canonical.p)}, {"q", number(knot.canonical.q)}};
  j["mirrored"] = knot.mirrored;
  j["oriented_q"] = number(knot.oriented_q);
  j["even_word"] = word_json(knot.even_word);
  j["positive_word"] = word_json(knot.positive_word);
  j["crossing_number"] = number(inv.crossing_number);
  j["genus"] = inv.genus;
  j["signature"] = inv.signature;
  j["determinant"] = number(inv.determinant);
  j["maxcf_alexander"] = number(inv.maxcf_alexander);
  j["fibered"] = inv.fibered;
  j["positive"] = inv.positive;
  j["negative"] = inv.negative;
  j["achiral"] = inv.achiral;
  j["u1"] = inv.u1;
  j["bleiler_counterexample"] = inv.bleiler_counterexample;
  j["u1_form"] = to_string(classify_u1_even_form(knot.even_word));
  return j;
}

ordered_json to_json(const CensusReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["pairs_twice"] = r.pairs_twice;
  j["total"] = number(r.total);
  j["by_genus"] = int_map(r.by_genus);
  j["by_signature"] = int_map(r.by_signature);
  ordered_json flags = ordered_json::object();
  for (auto& [k, v] : r.flag_counts) flags[k] = number(v);
  j["flag_counts"] = flags;
  j["mean_genus"] = number(r.mean_genus);
  j["mean_abs_signature"] = number(r.mean_abs_signature);
  return j;
}

ordered_json to_json(const LensCount& row) {
  ordered_json j;
  j["p"] = number(row.p);
  j["unoriented"] = number(row.unoriented);
  j["oriented"] = number(row.oriented);
  j["u1_unoriented"] = row.u1_unoriented ? number(*row.u1_unoriented) : ordered_json();
  j["u1_oriented"] = row.u1_oriented ? number(*row.u1_oriented) : ordered_json();
  j["is_ps"] = row.is_ps;
  j["in_N"] = row.in_N;
  j["in_S"] = row.in_S;
  return j;
}

ordered_json to_json(const PropositionReport& r) {
  ordered_json j;
  j["proposition"] = r.proposition;
  j["depth"] = r.depth;
  j["vectors_explored"] = r.vectors_explored;
  ordered_json vs = ordered_json::array();
  for (auto& v : r.violations) {
    ordered_json word = ordered_json::array();
    for (auto& [k, l] : v.word) word.push_back({k, l});
    vs.push_back({{"vector", {v.vector.first, v.vector.second}}, {"word", word}, {"reason", v.reason}});
  }
  j["violations"] = vs;
  ordered_json notes = ordered_json::object();
  for (auto& [k, v] : r.notes) notes[k] = v;
  j["notes"] = notes;
  return j;
}

ordered_json series_json(const TruncatedSeries& s) {
  ordered_json j;
  j["order"] = s.order();
  const auto flat = s.collapse();
  int first = 0;
  while (first < static_cast<int>(flat.size()) && flat[static_cast<std::size_t>(first)] == 0) ++first;
  j["first_degree"] = first;
  ordered_json cs = ordered_json::array();
  for (std::size_t i = static_cast<std::size_t>(first); i < flat.size(); ++i) cs.push_back(number(flat[i]));
  j["coefficients"] = cs;
  bool multivariate = false;
  for (int x = 0; x <= s.order(); ++x)
    for (auto& [k, c] : s.slice(x))
      if (k.first != 0 || k.second != 0) multivariate = true;
  if (multivariate) {
    ordered_json terms = ordered_json::array();
    for (int x = 0; x <= s.order(); ++x)
      for (auto& [k, c] : s.slice(x)) terms.push_back({x, k.first, k.second, number(c)});
    j["terms"] = terms;
  }
  return j;
}

std::string census_csv(const CensusReport& r) {
  std::ostringstream os;
  os << "section,key,count\n";
  os << "total,," << r.total.get_str() << "\n";
  for (auto& [g, c] : r.by_genus) os << "genus," << g << "," << c.get_str() << "\n";
  for (auto& [s, c] : r.by_signature) os << "signature," << s << "," << c.get_str() << "\n";
  for (auto& [k, c] : r.flag_counts) os << "flag," << k << "," << c.get_str() << "\n";
  return os.str();
}

std::string lens_csv(const std::vector<LensCount>& rows) {
  std::ostringstream os;
  os << "p,unoriented,oriented,u1_unoriented,u1_oriented,is_ps,in_N,in_S\n";
  for (auto& r : rows) {
    os << r.p.get_str() << "," << r.unoriented.get_str() << "," << r.oriented.get_str() << ","
       << (r.u1_unoriented ? r.u1_unoriented->get_str() : "") << ","
       << (r.u1_oriented ? r.u1_oriented->get_str() : "") << "," << r.is_ps << "," << r.in_N << ","
       << r.in_S << "\n";
  }
  return os.str();
}

}  // namespace ratknot::cli
