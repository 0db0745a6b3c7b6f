#include "bowditch/render.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bowditch {

using nlohmann::json;

static const std::string kCoords = "abcdxyz";

void SliceConfig::validate() const {
  if (kCoords.find(varying) == std::string::npos)
    throw std::invalid_argument("varying must be one of a,b,c,d,x,y,z");
  if (px_w < 1 || px_h < 1) throw std::invalid_argument("resolution must be >= 1x1");
  if (!(width > 0.0) || !(height > 0.0))
    throw std::invalid_argument("window width and height must be positive");
  bool solve = mode != SliceMode::Raw;
  if (solve && varying == 'd')
    throw std::invalid_argument("solve modes derive d; it cannot vary");
  for (char c : kCoords) {
    if (c == varying || (solve && c == 'd')) continue;
    if (!fixed.count(c))
      throw std::invalid_argument(std::string("missing fixed coordinate ") + c);
  }
  if (params.max_descent_steps <= 0 || params.max_faces <= 0 ||
      params.max_arc_steps <= 0 || params.max_total_edges <= 0)
    throw std::invalid_argument("budgets must be positive");
}

static Complex parse_pair(const json& j, const std::string& what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument(what + " must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

SliceConfig SliceConfig::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  try {
    SliceConfig c;
    if (j.contains("fixed"))
      for (auto& [k, v] : j.at("fixed").items()) {
        if (k.size() != 1 || kCoords.find(k[0]) == std::string::npos)
          throw std::invalid_argument("unknown coordinate '" + k + "'");
        c.fixed[k[0]] = parse_pair(v, "fixed." + k);
      }
    std::string var = j.value("varying", std::string("d"));
    if (var.size() != 1) throw std::invalid_argument("bad varying coordinate");
    c.varying = var[0];
    if (j.contains("center")) c.center = parse_pair(j.at("center"), "center");
    c.width = j.value("width", 4.0);
    c.height = j.value("height", 4.0);
    if (j.contains("px")) {
      const json& px = j.at("px");
      if (!px.is_array() || px.size() != 2)
        throw std::invalid_argument("px must be [W, H]");
      c.px_w = px[0].get<int>();
      c.px_h = px[1].get<int>();
    }
    if (j.contains("k_override") && !j.at("k_override").is_null())
      c.params.K = j.at("k_override").get<double>();
    if (j.contains("budgets")) {
      const json& b = j.at("budgets");
      c.params.max_descent_steps = b.value("max_descent_steps", c.params.max_descent_steps);
      c.params.max_faces = b.value("max_faces", c.params.max_faces);
      c.params.max_arc_steps = b.value("max_arc_steps", c.params.max_arc_steps);
      c.params.max_total_edges = b.value("max_total_edges", c.params.max_total_edges);
    }
    c.params.tol_real = j.value("tol_real", c.params.tol_real);
    c.params.tol_sigma = j.value("tol_sigma", c.params.tol_sigma);
    std::string mode = j.value("mode", std::string("raw"));
    if (mode == "raw") c.mode = SliceMode::Raw;
    else if (mode == "solve_plus") c.mode = SliceMode::SolvePlus;
    else if (mode == "solve_minus") c.mode = SliceMode::SolveMinus;
    else throw std::invalid_argument("unknown mode '" + mode + "'");
    c.validate();
    return c;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad config field: ") + e.what());
  }
}

std::uint8_t verdict_tag(const BqVerdict& v) {
  if (v.in_bq()) return 4;
  if (v.undecided()) return 3;
  const Witness& w = std::get<NotBQ>(v.result).witness;
  if (std::holds_alternative<Bq1Violation>(w)) return 0;
  if (std::holds_alternative<SigmaZero>(w)) return 1;
  return 2;
}

std::array<std::uint8_t, 3> pixel_color(const PixelResult& p) {
  auto fade = static_cast<std::uint8_t>(255 - std::min<long>(p.steps, 192));
  switch (p.tag) {
    case 0: return {0, 0, fade};
    case 1: return {0, 255, 0};
    case 2: return {fade, 0, 0};
    case 3: return {255, 255, 255};
    default: return {0, 0, 0};
  }
}

Complex pixel_value(const SliceConfig& cfg, int i, int j) {
  double re = cfg.center.real() - cfg.width / 2.0 + (i + 0.5) * cfg.width / cfg.px_w;
  double im = cfg.center.imag() + cfg.height / 2.0 - (j + 0.5) * cfg.height / cfg.px_h;
  return {re, im};
}

MarkoffQuad pixel_quad(const SliceConfig& cfg, int i, int j) {
  std::map<char, Complex> v = cfg.fixed;
  v[cfg.varying] = pixel_value(cfg, i, j);
  BoundaryData w(v['x'], v['y'], v['z']);
  if (cfg.mode != SliceMode::Raw)
    v['d'] = solve_fourth(v['a'], v['b'], v['c'], w,
                          cfg.mode == SliceMode::SolvePlus ? Root::Plus : Root::Minus);
  return MarkoffQuad::unchecked({v['a'], v['b'], v['c'], v['d']}, w);
}

PixelResult decide_pixel(const SliceConfig& cfg, int i, int j) {
  MarkoffQuad q = pixel_quad(cfg, i, j);
  MarkoffMap m(q);
  BqVerdict v = decide_bq(m, cfg.params);
  return {verdict_tag(v), v.steps, q.residual};
}

RenderResult render_slice(const SliceConfig& cfg, int threads) {
  cfg.validate();
  RenderResult r;
  r.width = cfg.px_w;
  r.height = cfg.px_h;
  const long n = static_cast<long>(cfg.px_w) * cfg.px_h;
  // K must dominate 2 + M at every pixel; fail before spawning workers.
  for (long k = 0; k < n; ++k)
    resolve_k(cfg.params, pixel_quad(cfg, static_cast<int>(k % cfg.px_w),
                                     static_cast<int>(k / cfg.px_w))
                              .boundary);
  r.pixels.resize(n);
  std::atomic<long> next{0};
  auto worker = [&] {
    for (long k; (k = next.fetch_add(1)) < n;)
      r.pixels[k] = decide_pixel(cfg, static_cast<int>(k % cfg.px_w),
                                 static_cast<int>(k / cfg.px_w));
  };
  int t = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int k = 1; k < t; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  r.rgb.reserve(3 * n);
  for (const PixelResult& p : r.pixels)
    for (std::uint8_t c : pixel_color(p)) r.rgb.push_back(c);
  return r;
}

std::string ppm_bytes(const RenderResult& r) {
  std::string out = "P6\n" + std::to_string(r.width) + " " +
                    std::to_string(r.height) + "\n255\n";
  out.append(r.rgb.begin(), r.rgb.end());
  return out;
}

void write_ppm(const RenderResult& r, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  std::string bytes = ppm_bytes(r);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

std::string render_report(const SliceConfig& cfg, const RenderResult& r) {
  static const char* names[5] = {"notbq_bq1", "notbq_sigma", "notbq_arc",
                                 "undecided", "inbq"};
  std::array<long, 5> counts{};
  long off = 0;
  double worst = 0.0;
  for (const PixelResult& p : r.pixels) {
    ++counts[p.tag];
    worst = std::max(worst, p.residual);
    if (p.residual > 1e-9) ++off;
  }
  std::ostringstream os;
  os << "pixels " << r.width << "x" << r.height << "\n";
  os << "varying " << cfg.varying << "\n";
  for (int k = 0; k < 5; ++k) os << names[k] << " " << counts[k] << "\n";
  os << "off_variety " << off << "\n";
  os << "max_relative_residual " << worst << "\n";
  return os.str();
}

}  // namespace bowditch
