#include "locsyn/param/plant.hpp"

#include "locsyn/error.hpp"
#include "locsyn/ratfun/serialize.hpp"
#include "locsyn/sis/serialize.hpp"

namespace locsyn::param {

namespace {

Eigen::MatrixXd block_diag(const std::vector<Eigen::MatrixXd>& blocks) {
  Eigen::Index r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

}  // namespace

std::string to_string(PlantKind kind) {
  switch (kind) {
    case PlantKind::SiFirstOrder: return "si_first_order";
    case PlantKind::SiNthOrder: return "si_nth_order";
    case PlantKind::VaryingFirstOrder: return "varying_first_order";
    case PlantKind::VaryingNthOrder: return "varying_nth_order";
    case PlantKind::CoupledStable: return "coupled_stable";
    case PlantKind::CoupledB2Invertible: return "coupled_b2_invertible";
  }
  return "unknown";
}

PlantKind plant_kind_from_string(const std::string& s) {
  for (PlantKind k : {PlantKind::SiFirstOrder, PlantKind::SiNthOrder, PlantKind::VaryingFirstOrder,
                      PlantKind::VaryingNthOrder, PlantKind::CoupledStable, PlantKind::CoupledB2Invertible})
    if (to_string(k) == s) return k;
  fail(ErrorCode::ConfigError, "unknown plant kind '" + s + "'");
}

bool PlantSpec::spatially_invariant() const {
  return kind != PlantKind::VaryingFirstOrder && kind != PlantKind::VaryingNthOrder;
}

sis::ConvKernel PlantSpec::state_kernel() const {
  switch (kind) {
    case PlantKind::SiFirstOrder: return sis::ConvKernel::pointwise(N, ratfun::RatMatrix::scalar(a), infinite);
    case PlantKind::SiNthOrder: return sis::ConvKernel::pointwise(N, ratfun::RatMatrix(A), infinite);
    case PlantKind::CoupledStable:
    case PlantKind::CoupledB2Invertible: return A_kernel;
    default: fail(ErrorCode::UnsupportedPlant, "spatially-varying plant has no state kernel");
  }
}

sis::ConvKernel PlantSpec::input_kernel() const {
  switch (kind) {
    case PlantKind::SiFirstOrder: return sis::ConvKernel::identity(N, 1, infinite);
    case PlantKind::SiNthOrder: return sis::ConvKernel::pointwise(N, ratfun::RatMatrix(B2), infinite);
    case PlantKind::CoupledStable:
    case PlantKind::CoupledB2Invertible: return B2_kernel;
    default: fail(ErrorCode::UnsupportedPlant, "spatially-varying plant has no input kernel");
  }
}

Eigen::MatrixXd PlantSpec::state_matrix() const {
  if (kind == PlantKind::VaryingFirstOrder) return Eigen::Map<const Eigen::VectorXd>(a_sites.data(), static_cast<Eigen::Index>(a_sites.size())).asDiagonal();
  if (kind == PlantKind::VaryingNthOrder) return block_diag(A_sites);
  fail(ErrorCode::UnsupportedPlant, "state matrix is defined for spatially-varying plants");
}

Eigen::MatrixXd PlantSpec::input_matrix() const {
  if (kind == PlantKind::VaryingFirstOrder) return Eigen::Map<const Eigen::VectorXd>(b_sites.data(), static_cast<Eigen::Index>(b_sites.size())).asDiagonal();
  if (kind == PlantKind::VaryingNthOrder) return block_diag(B2_sites);
  fail(ErrorCode::UnsupportedPlant, "input matrix is defined for spatially-varying plants");
}

void to_json(nlohmann::json& j, const PlantSpec& p) {
  using ratfun::matrix_to_json;
  j = nlohmann::json{{"kind", to_string(p.kind)}, {"N", p.N}, {"infinite", p.infinite}};
  switch (p.kind) {
    case PlantKind::SiFirstOrder: j["a"] = p.a; break;
    case PlantKind::SiNthOrder:
      j["A"] = matrix_to_json(p.A);
      j["B2"] = matrix_to_json(p.B2);
      break;
    case PlantKind::VaryingFirstOrder:
      j["a_sites"] = p.a_sites;
      j["b_sites"] = p.b_sites;
      break;
    case PlantKind::VaryingNthOrder: {
      nlohmann::json as = nlohmann::json::array(), bs = nlohmann::json::array();
      for (const auto& m : p.A_sites) as.push_back(matrix_to_json(m));
      for (const auto& m : p.B2_sites) bs.push_back(matrix_to_json(m));
      j["A_sites"] = as;
      j["B2_sites"] = bs;
      break;
    }
    case PlantKind::CoupledStable:
    case PlantKind::CoupledB2Invertible:
      j["A_kernel"] = p.A_kernel;
      j["B2_kernel"] = p.B2_kernel;
      break;
  }
  if (p.B1) j["B1"] = *p.B1;
  if (p.C1) j["C1"] = *p.C1;
  if (p.D12) j["D12"] = *p.D12;
}

void from_json(const nlohmann::json& j, PlantSpec& p) {
  using ratfun::matrix_from_json;
  if (!j.contains("kind")) fail(ErrorCode::ConfigError, "plant needs a kind");
  p = PlantSpec{};
  p.kind = plant_kind_from_string(j.at("kind").get<std::string>());
  p.N = j.value("N", 1);
  p.infinite = j.value("infinite", false);
  switch (p.kind) {
    case PlantKind::SiFirstOrder: p.a = j.at("a").get<double>(); break;
    case PlantKind::SiNthOrder:
      p.A = matrix_from_json(j.at("A"));
      p.B2 = matrix_from_json(j.at("B2"));
      break;
    case PlantKind::VaryingFirstOrder:
      p.a_sites = j.at("a_sites").get<std::vector<double>>();
      p.b_sites = j.at("b_sites").get<std::vector<double>>();
      break;
    case PlantKind::VaryingNthOrder:
      for (const auto& m : j.at("A_sites")) p.A_sites.push_back(matrix_from_json(m));
      for (const auto& m : j.at("B2_sites")) p.B2_sites.push_back(matrix_from_json(m));
      break;
    case PlantKind::CoupledStable:
    case PlantKind::CoupledB2Invertible:
      p.A_kernel = j.at("A_kernel").get<sis::ConvKernel>();
      p.B2_kernel = j.at("B2_kernel").get<sis::ConvKernel>();
      break;
  }
  if (j.contains("B1")) p.B1 = j.at("B1").get<sis::ConvKernel>();
  if (j.contains("C1")) p.C1 = j.at("C1").get<sis::ConvKernel>();
  if (j.contains("D12")) p.D12 = j.at("D12").get<sis::ConvKernel>();
}

}  // namespace locsyn::param
