#include "spectra/domain.hpp"

namespace spectra {

BoxN product_box(const BoxN& a, const BoxN& b) {
  BoxN r = a;
  r.lo.insert(r.lo.end(), b.lo.begin(), b.lo.end());
  r.hi.insert(r.hi.end(), b.hi.begin(), b.hi.end());
  return r;
}

Domain Domain::interval(Scalar lo, Scalar hi) {
  if (!(lo < hi)) raise(Err::BadInput, "interval needs lo < hi");
  Domain d;
  d.kind_ = Kind::Interval;
  d.dim_ = 1;
  BoxN b;
  b.lo = {lo};
  b.hi = {hi};
  d.boxes_ = {b};
  d.measure_ = hi - lo;
  return d;
}

Domain Domain::box_union(std::vector<BoxN> boxes) {
  if (boxes.empty()) raise(Err::BadInput, "empty box union");
  int dim = boxes[0].dim();
  Scalar vol(0);
  for (auto& b : boxes) {
    if (b.dim() != dim || (int)b.hi.size() != dim) raise(Err::DimensionMismatch, "box dims differ");
    for (int i = 0; i < dim; ++i)
      if (!(b.lo[i] < b.hi[i])) raise(Err::BadInput, "box needs lo < hi per axis");
    vol = vol + b.volume();
  }
  for (size_t i = 0; i < boxes.size(); ++i) {
    for (size_t j = i + 1; j < boxes.size(); ++j) {
      bool overlap = true;
      for (int k = 0; k < dim; ++k)
        if (!(boxes[i].lo[k] < boxes[j].hi[k] && boxes[j].lo[k] < boxes[i].hi[k])) overlap = false;
      if (overlap) raise(Err::BadInput, "boxes overlap as open sets");
    }
  }
  Domain d;
  d.kind_ = Kind::BoxUnion;
  d.dim_ = dim;
  d.boxes_ = std::move(boxes);
  d.measure_ = vol;
  return d;
}

Domain Domain::polygon(Polygon p) {
  Domain d;
  d.kind_ = Kind::Polygon;
  d.dim_ = 2;
  d.measure_ = Scalar(area(p));
  PolygonF pf;
  pf.v.reserve(p.v.size());
  for (auto& q : p.v) pf.v.push_back(to_d(q));
  if (p.center) pf.center = to_d(*p.center);
  d.polyf_ = std::move(pf);
  d.poly_ = std::move(p);
  d.init_polygon_eval();
  return d;
}

Domain Domain::polygon_float(PolygonF p) {
  Domain d;
  d.kind_ = Kind::Polygon;
  d.dim_ = 2;
  d.measure_ = Scalar(area(p));
  d.polyf_ = std::move(p);
  d.init_polygon_eval();
  return d;
}

Domain Domain::product(Domain a, Domain b) {
  Domain d;
  d.kind_ = Kind::Product;
  d.dim_ = a.dim() + b.dim();
  d.measure_ = a.measure() * b.measure();
  d.factors_.push_back(std::make_shared<Domain>(std::move(a)));
  d.factors_.push_back(std::make_shared<Domain>(std::move(b)));
  return d;
}

const Domain& Domain::factor(int i) const {
  if (kind_ != Kind::Product || i < 0 || i > 1) raise(Err::BadIndex, "not a product factor");
  return *factors_[i];
}

void Domain::init_polygon_eval() {
  const auto& v = polyf_.v;
  int n = (int)v.size();
  edges_.resize(n);
  for (int i = 0; i < n; ++i) {
    V2d a = v[i], b = v[(i + 1) % n];
    V2d vec = b - a;
    edges_[i] = {{(a.x + b.x) / 2, (a.y + b.y) / 2}, vec, {vec.y, -vec.x}};
  }
  // Shoelace moments up to order two, for the small-|xi| series branch.
  double A = 0, Mx = 0, My = 0, Ixx = 0, Ixy = 0, Iyy = 0;
  for (int i = 0; i < n; ++i) {
    V2d a = v[i], b = v[(i + 1) % n];
    double c = a.x * b.y - b.x * a.y;
    A += c / 2;
    Mx += (a.x + b.x) * c / 6;
    My += (a.y + b.y) * c / 6;
    Ixx += (a.x * a.x + a.x * b.x + b.x * b.x) * c / 12;
    Iyy += (a.y * a.y + a.y * b.y + b.y * b.y) * c / 12;
    Ixy += (2 * a.x * a.y + a.x * b.y + b.x * a.y + 2 * b.x * b.y) * c / 24;
  }
  moments_ = {A, Mx, My, Ixx, Ixy, Iyy};
}

std::vector<double> Domain::centroid() const {
  switch (kind_) {
    case Kind::Interval:
      return {(boxes_[0].lo[0].value() + boxes_[0].hi[0].value()) / 2};
    case Kind::BoxUnion: {
      std::vector<double> c(dim_, 0.0);
      double total = 0;
      for (const auto& b : boxes_) {
        double vol = b.volume().value();
        total += vol;
        for (int i = 0; i < dim_; ++i) c[i] += vol * (b.lo[i].value() + b.hi[i].value()) / 2;
      }
      for (auto& x : c) x /= total;
      return c;
    }
    case Kind::Polygon:
      return {moments_[1] / moments_[0], moments_[2] / moments_[0]};
    case Kind::Product: {
      auto a = factors_[0]->centroid();
      auto b = factors_[1]->centroid();
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }
  }
  return {};
}

}  // namespace spectra
