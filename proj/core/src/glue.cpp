#include "coarse/glue.hpp"

#include <stdexcept>

namespace coarse {

namespace {

void add_internal_edges(GraphBuilder& builder, const MetricSpace& space, PointIndex offset) {
  for (const Edge& e : metric_skeleton(space)) {
    builder.add(offset + e.u, offset + e.v, e.weight, EdgeKind::kInternal);
  }
}

}  // namespace

GlueResult coarse_glue(const MappedPair& f, const MappedPair& g) {
  if (!same_space(f.source(), g.source())) {
    throw std::domain_error("coarse_glue: maps do not share a source");
  }
  const Coproduct disjoint = coproduct(f.target_ptr(), g.target_ptr());
  const PointIndex offset = f.target().size();

  GraphBuilder builder(disjoint.space->ids());
  add_internal_edges(builder, f.target(), 0);
  add_internal_edges(builder, g.target(), offset);
  for (PointIndex a = 0; a < f.source().size(); ++a) {
    builder.add(f(a), offset + g(a), 1.0, EdgeKind::kGlued);
  }
  WeightedGraph graph = std::move(builder).build();
  auto space = std::make_shared<const MetricSpace>(path_metric(graph));
  return GlueResult{std::move(graph), space,
                    MappedPair(f.target_ptr(), space, disjoint.left.assignment()),
                    MappedPair(g.target_ptr(), space, disjoint.right.assignment())};
}

CoequaliserResult coeq_space(const MappedPair& f, const MappedPair& g) {
  if (!same_space(f.source(), g.source()) || !same_space(f.target(), g.target())) {
    throw std::domain_error("coeq_space: maps do not share source and target");
  }
  GraphBuilder builder(f.target().ids());
  add_internal_edges(builder, f.target(), 0);
  for (PointIndex a = 0; a < f.source().size(); ++a) {
    // fa = ga would be a self-loop; the path metric does not see it.
    if (f(a) != g(a)) builder.add(f(a), g(a), 1.0, EdgeKind::kGlued);
  }
  WeightedGraph graph = std::move(builder).build();
  auto space = std::make_shared<const MetricSpace>(path_metric(graph));
  std::vector<PointIndex> identity(space->size());
  for (PointIndex i = 0; i < identity.size(); ++i) identity[i] = i;
  return CoequaliserResult{std::move(graph), space,
                           MappedPair(f.target_ptr(), space, std::move(identity))};
}

ComparisonReport double_glue_comparison(const MappedPair& f, const MappedPair& g) {
  const CoequaliserResult coeq = coeq_space(f, g);
  const SpacePtr& X = f.target_ptr();
  const std::size_t n = X->size();

  // A ⊔ X with the maps f ⊔ 1 and g ⊔ 1 into X.
  const Coproduct domain = coproduct(f.source_ptr(), X);
  const MappedPair identity = MappedPair::identity(X);
  const GlueResult glued =
      coarse_glue(copair(domain, f, identity), copair(domain, g, identity));

  ComparisonReport report;
  report.double_glued = glued.space;
  report.coequaliser = coeq.space;
  report.tolerance = joint_tolerance(*glued.space, *coeq.space);

  // Points (x,0) sit at index x, (x,1) at n + x.
  std::vector<PointIndex> r_assign(2 * n);
  for (PointIndex x = 0; x < n; ++x) r_assign[x] = r_assign[n + x] = x;
  const MappedPair r(glued.space, coeq.space, std::move(r_assign));
  const MappedPair s(coeq.space, glued.space, glued.left.assignment());

  const LipschitzFit r_fit = lipschitz_constant(r);
  const LipschitzFit s_fit = lipschitz_constant(s);
  report.r_lipschitz = r_fit.constant;
  report.r_witness = r_fit.witness;
  report.s_lipschitz = s_fit.constant;
  report.s_witness = s_fit.witness;

  const MappedPair rs = compose(r, s);
  report.rs_identity = rs.assignment() == MappedPair::identity(coeq.space).assignment();
  report.sr_closeness = closeness_distance(compose(s, r), MappedPair::identity(glued.space));
  return report;
}

}  // namespace coarse
