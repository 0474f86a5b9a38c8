#include "eiscoh/report_io.hpp"

#include <nlohmann/json.hpp>

#include <limits>
#include <sstream>
#include <stdexcept>

namespace eiscoh {

namespace {

using nlohmann::json;

long long to_int64(const Integer &n, const char *who) {
  if (n > std::numeric_limits<long long>::max() ||
      n < std::numeric_limits<long long>::min())
    throw std::invalid_argument(std::string(who) + ": integer out of range");
  return n.convert_to<long long>();
}

long long rational_to_int64(const Rational &q, const char *who) {
  if (!is_integer(q))
    throw std::invalid_argument(std::string(who) + ": expected an integer");
  return to_int64(numerator(q), who);
}

const char *family_name(Family f) {
  switch (f) {
  case Family::AllPairs:
    return "all_pairs";
  case Family::SigmaNotEqualTau:
    return "sigma_not_equal_tau";
  default:
    return "sigma_equals_tau";
  }
}

const char *nature_name(Nature n) {
  return n == Nature::HolomorphicValue ? "holomorphic_value" : "residue_class";
}

const char *kind_name(DualKind k) {
  switch (k) {
  case DualKind::TrivialRep:
    return "trivial";
  case DualKind::LanglandsQuotient:
    return "langlands_quotient";
  default:
    return "tempered_induced";
  }
}

const char *status_name(CuspidalState s) {
  switch (s) {
  case CuspidalState::Zero:
    return "zero";
  case CuspidalState::NonZero:
    return "nonzero";
  default:
    return "unknown";
  }
}

Family family_from(const std::string &s) {
  if (s == "all_pairs")
    return Family::AllPairs;
  if (s == "sigma_not_equal_tau")
    return Family::SigmaNotEqualTau;
  if (s == "sigma_equals_tau")
    return Family::SigmaEqualsTau;
  throw std::invalid_argument("report JSON: unknown family '" + s + "'");
}

Nature nature_from(const std::string &s) {
  if (s == "holomorphic_value")
    return Nature::HolomorphicValue;
  if (s == "residue_class")
    return Nature::ResidueClass;
  throw std::invalid_argument("report JSON: unknown nature '" + s + "'");
}

DualKind kind_from(const std::string &s) {
  if (s == "trivial")
    return DualKind::TrivialRep;
  if (s == "langlands_quotient")
    return DualKind::LanglandsQuotient;
  if (s == "tempered_induced")
    return DualKind::TemperedInduced;
  throw std::invalid_argument("report JSON: unknown kind '" + s + "'");
}

CuspidalState status_from(const std::string &s) {
  if (s == "zero")
    return CuspidalState::Zero;
  if (s == "nonzero")
    return CuspidalState::NonZero;
  if (s == "unknown")
    return CuspidalState::Unknown;
  throw std::invalid_argument("report JSON: unknown status '" + s + "'");
}

Rational rational_from_json(const json &j, const char *who) {
  if (!j.is_string())
    throw std::invalid_argument(std::string("report JSON: ") + who +
                                " must be a \"p/q\" string");
  const auto q = parse_rational(j.get<std::string>());
  if (!q)
    throw std::invalid_argument(std::string("report JSON: malformed rational in ") +
                                who);
  return *q;
}

json word_to_json(const WeylElement &w) { return json(w.word); }

WeylElement word_from_json(const json &j) {
  if (!j.is_array())
    throw std::invalid_argument("report JSON: word must be an array");
  std::vector<int> word;
  for (const auto &g : j) {
    const int i = g.get<int>();
    if (i < 1 || i > 3)
      throw std::invalid_argument("report JSON: word letters must be 1..3");
    word.push_back(i);
  }
  return from_word(word);
}

json mweight_to_json(const MWeight &m) {
  return json::array({rational_to_string(m.m1), rational_to_string(m.m3)});
}

MWeight mweight_from_json(const json &j, const char *who) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument(std::string("report JSON: ") + who +
                                " must have two entries");
  return MWeight{rational_from_json(j[0], who), rational_from_json(j[1], who)};
}

} // namespace

std::string render_report_json(const CohomologyReport &r) {
  json j;
  j["lambda_alpha"] =
      json::array({rational_to_string(r.lambda.c1), rational_to_string(r.lambda.c2),
                   rational_to_string(r.lambda.c3)});
  j["lambda_fund"] = json::array({rational_to_int64(r.lambda_fund[0], "n1"),
                                  rational_to_int64(r.lambda_fund[1], "n2"),
                                  rational_to_int64(r.lambda_fund[2], "n3")});
  j["j_lambda"] = r.j_lambda;
  j["self_dual"] = r.self_dual;
  if (r.k_omega2)
    j["k_omega2"] = to_int64(*r.k_omega2, "k_omega2");
  else
    j["k_omega2"] = nullptr;

  j["unitary_dual"] = json::array();
  for (const auto &e : r.unitary_dual) {
    json je;
    je["j"] = e.j;
    je["kind"] = kind_name(e.kind);
    je["word"] = word_to_json(e.word);
    je["mu_w"] = mweight_to_json(e.f_hw);
    je["t"] = e.t ? json(rational_to_string(*e.t)) : json(nullptr);
    je["degrees"] = json::array({e.degrees[0], e.degrees[1]});
    j["unitary_dual"].push_back(std::move(je));
  }

  j["eisenstein"] = json::array();
  for (const auto &d : r.eisenstein) {
    json jd;
    jd["degree"] = d.degree;
    jd["word"] = word_to_json(d.kostant_word);
    jd["s"] = rational_to_string(d.s);
    jd["mu_w"] = mweight_to_json(d.levi_hw);
    jd["family"] = family_name(d.family);
    jd["dims"] = json::array(
        {to_int64(d.dim_sigma, "dims"), to_int64(d.dim_tau, "dims")});
    jd["nature"] = nature_name(d.nature);
    j["eisenstein"].push_back(std::move(jd));
  }

  j["cuspidal"] = json::array();
  for (const auto &c : r.cuspidal) {
    json jc;
    jc["degree"] = c.degree;
    jc["status"] = status_name(c.status);
    jc["witness"] = c.witness;
    j["cuspidal"].push_back(std::move(jc));
  }

  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

CohomologyReport report_from_json(const std::string &text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &e) {
    throw std::invalid_argument(std::string("report JSON: parse error: ") +
                                e.what());
  }
  try {
    CohomologyReport r;
    const auto &la = j.at("lambda_alpha");
    r.lambda = Weight{rational_from_json(la.at(0), "lambda_alpha"),
                      rational_from_json(la.at(1), "lambda_alpha"),
                      rational_from_json(la.at(2), "lambda_alpha")};
    for (int i = 0; i < 3; ++i)
      r.lambda_fund[i] = Rational(j.at("lambda_fund").at(i).get<long long>());
    r.j_lambda = j.at("j_lambda").get<int>();
    r.self_dual = j.at("self_dual").get<bool>();
    if (!j.at("k_omega2").is_null())
      r.k_omega2 = Integer(j.at("k_omega2").get<long long>());

    for (const auto &je : j.at("unitary_dual")) {
      UnitaryDualEntry e;
      e.j = je.at("j").get<int>();
      e.kind = kind_from(je.at("kind").get<std::string>());
      e.word = word_from_json(je.at("word"));
      e.f_hw = mweight_from_json(je.at("mu_w"), "unitary_dual.mu_w");
      if (!je.at("t").is_null())
        e.t = rational_from_json(je.at("t"), "unitary_dual.t");
      e.degrees = {je.at("degrees").at(0).get<int>(),
                   je.at("degrees").at(1).get<int>()};
      r.unitary_dual.push_back(std::move(e));
    }

    for (const auto &jd : j.at("eisenstein")) {
      ContributionDescriptor d;
      d.degree = jd.at("degree").get<int>();
      d.kostant_word = word_from_json(jd.at("word"));
      d.s = rational_from_json(jd.at("s"), "eisenstein.s");
      d.levi_hw = mweight_from_json(jd.at("mu_w"), "eisenstein.mu_w");
      d.family = family_from(jd.at("family").get<std::string>());
      d.dim_sigma = Integer(jd.at("dims").at(0).get<long long>());
      d.dim_tau = Integer(jd.at("dims").at(1).get<long long>());
      d.nature = nature_from(jd.at("nature").get<std::string>());
      r.eisenstein.push_back(std::move(d));
    }

    for (const auto &jc : j.at("cuspidal")) {
      CuspidalEntry c;
      c.degree = jc.at("degree").get<int>();
      c.status = status_from(jc.at("status").get<std::string>());
      c.witness = jc.at("witness").get<std::string>();
      r.cuspidal.push_back(std::move(c));
    }

    for (const auto &n : j.at("notes"))
      r.notes.push_back(n.get<std::string>());
    return r;
  } catch (const json::exception &e) {
    throw std::invalid_argument(std::string("report JSON: bad shape: ") +
                                e.what());
  }
}

namespace {

std::string weight_str(const Weight &v) {
  return "(" + rational_to_string(v.c1) + ", " + rational_to_string(v.c2) +
         ", " + rational_to_string(v.c3) + ")";
}

std::string mweight_str(const MWeight &m) {
  return "(" + rational_to_string(m.m1) + ", " + rational_to_string(m.m3) + ")";
}

} // namespace

std::string render_report_text(const CohomologyReport &r) {
  std::ostringstream os;
  os << "lambda (alpha coords): " << weight_str(r.lambda) << "\n";
  os << "lambda (fund coords):  (" << rational_to_string(r.lambda_fund[0])
     << ", " << rational_to_string(r.lambda_fund[1]) << ", "
     << rational_to_string(r.lambda_fund[2]) << ")\n";
  os << "j(lambda): " << r.j_lambda << "\n";
  os << "self-dual: " << (r.self_dual ? "yes" : "no") << "\n";
  if (r.k_omega2)
    os << "lambda = k*w2 with k = " << r.k_omega2->str() << "\n";
  os << "\n";

  os << "cohomological unitary dual";
  if (r.unitary_dual.empty())
    os << ": empty\n";
  else {
    os << ":\n";
    for (const auto &e : r.unitary_dual) {
      os << "  A_" << e.j << "  ";
      switch (e.kind) {
      case DualKind::TrivialRep:
        os << "trivial representation J(F_id, 2)";
        break;
      case DualKind::LanglandsQuotient:
        os << "Langlands quotient J(F_" << weyl_name(e.word) << ", "
           << rational_to_string(*e.t) << ")";
        break;
      default:
        os << "tempered, induced from F_" << weyl_name(e.word);
        break;
      }
      os << "  [F hw " << mweight_str(e.f_hw) << ", degrees {" << e.degrees[0]
         << "," << e.degrees[1] << "}]\n";
    }
  }
  os << "\n";

  os << "eisenstein cohomology:\n";
  for (const auto &d : r.eisenstein) {
    os << "  degree " << d.degree << "  "
       << (d.nature == Nature::HolomorphicValue ? "holomorphic value"
                                                : "residue class    ")
       << "  w = " << weyl_name(d.kostant_word)
       << "  s = " << rational_to_string(d.s) << "  mu_w = "
       << mweight_str(d.levi_hw) << "  dims = (" << d.dim_sigma << ","
       << d.dim_tau << ")  ";
    switch (d.family) {
    case Family::AllPairs:
      os << "all (sigma,tau)";
      break;
    case Family::SigmaNotEqualTau:
      os << "sigma != tau";
      break;
    default:
      os << "sigma = tau";
      break;
    }
    os << "\n";
  }
  os << "\n";

  os << "cuspidal cohomology:\n";
  for (const auto &c : r.cuspidal) {
    os << "  degree " << c.degree << "  ";
    switch (c.status) {
    case CuspidalState::Zero:
      os << "zero    ";
      break;
    case CuspidalState::NonZero:
      os << "nonzero ";
      break;
    default:
      os << "unknown ";
      break;
    }
    os << " " << c.witness << "\n";
  }
  os << "\n";

  os << "notes:\n";
  for (const auto &n : r.notes)
    os << "  - " << n << "\n";
  return os.str();
}

} // namespace eiscoh
