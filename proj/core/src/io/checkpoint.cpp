#include "avlm/io/checkpoint.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>

namespace avlm::io {

namespace {

using nlohmann::json;

double parse_double(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') {
    throw CheckpointError("bad numeric literal '" + s + "'");
  }
  return v;
}

json vec_to_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(format_g17(v(i)));
  return arr;
}

Eigen::VectorXd vec_from_json(const json& arr) {
  Eigen::VectorXd v(arr.size());
  Eigen::Index i = 0;
  for (const auto& e : arr) v(i++) = parse_double(e.get<std::string>());
  return v;
}

}  // namespace

std::string format_g17(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string checkpoint_to_json(const Checkpoint& ckpt) {
  const auto& st = ckpt.stats;
  const Eigen::Index k = st.p() + st.d();

  json gram_upper = json::array();
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i; j < k; ++j) {
      gram_upper.push_back(format_g17(st.gram()(i, j)));
    }
  }

  json doc;
  doc["version"] = Checkpoint::kVersion;
  doc["p"] = st.p();
  doc["d"] = st.d();
  doc["n"] = st.n();
  doc["gram_upper"] = gram_upper;
  doc["gram_diag_comp"] = vec_to_json(st.gram_diag_comp());
  doc["cross"] = vec_to_json(st.cross());
  doc["yty"] = format_g17(st.yty());
  doc["yty_comp"] = format_g17(st.yty_comp());
  doc["p_running_min"] = format_g17(ckpt.p_running_min);

  json cfg;
  cfg["alpha"] = format_g17(ckpt.config.alpha);
  cfg["delta0"] = vec_to_json(ckpt.config.delta0);
  cfg["method"] = ckpt.config.method;
  cfg["mixture_form"] = ckpt.config.mixture_form;
  cfg["mixture_value"] = format_g17(ckpt.config.mixture_value);
  cfg["omega"] = format_g17(ckpt.config.omega);
  doc["config"] = cfg;
  return doc.dump(2);
}

Checkpoint checkpoint_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw CheckpointError(std::string("corrupt checkpoint: ") + e.what());
  }
  try {
    if (!doc.contains("version") || !doc["version"].is_number_integer()) {
      throw CheckpointError("corrupt checkpoint: missing version");
    }
    const int version = doc["version"].get<int>();
    if (version != Checkpoint::kVersion) {
      throw CheckpointError("unsupported checkpoint version " +
                            std::to_string(version) + ", expected " +
                            std::to_string(Checkpoint::kVersion));
    }
    const auto p = doc.at("p").get<Eigen::Index>();
    const auto d = doc.at("d").get<Eigen::Index>();
    const auto n = doc.at("n").get<long>();
    const Eigen::Index k = p + d;

    Eigen::MatrixXd gram(k, k);
    const auto& upper = doc.at("gram_upper");
    if (static_cast<Eigen::Index>(upper.size()) != k * (k + 1) / 2) {
      throw CheckpointError("corrupt checkpoint: gram size mismatch");
    }
    std::size_t idx = 0;
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = i; j < k; ++j) {
        gram(i, j) = parse_double(upper[idx++].get<std::string>());
        gram(j, i) = gram(i, j);
      }
    }

    Checkpoint ckpt;
    ckpt.stats = SufficientStats::restore(
        p, d, n, std::move(gram), vec_from_json(doc.at("cross")),
        parse_double(doc.at("yty").get<std::string>()),
        vec_from_json(doc.at("gram_diag_comp")),
        parse_double(doc.at("yty_comp").get<std::string>()));
    ckpt.p_running_min =
        parse_double(doc.at("p_running_min").get<std::string>());

    const auto& cfg = doc.at("config");
    ckpt.config.alpha = parse_double(cfg.at("alpha").get<std::string>());
    ckpt.config.delta0 = vec_from_json(cfg.at("delta0"));
    ckpt.config.method = cfg.at("method").get<std::string>();
    ckpt.config.mixture_form = cfg.at("mixture_form").get<std::string>();
    ckpt.config.mixture_value =
        parse_double(cfg.at("mixture_value").get<std::string>());
    ckpt.config.omega = parse_double(cfg.at("omega").get<std::string>());
    return ckpt;
  } catch (const json::exception& e) {
    throw CheckpointError(std::string("corrupt checkpoint: ") + e.what());
  }
}

void checkpoint_save(const Checkpoint& ckpt, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw CheckpointError("cannot open checkpoint file for writing: " + path);
  }
  out << checkpoint_to_json(ckpt) << '\n';
  if (!out.good()) {
    throw CheckpointError("failed writing checkpoint: " + path);
  }
}

Checkpoint checkpoint_load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CheckpointError("cannot open checkpoint file: " + path);
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return checkpoint_from_json(text);
}

}  // namespace avlm::io
