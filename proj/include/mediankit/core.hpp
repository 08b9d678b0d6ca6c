#pragma once

#include <string>
#include <vector>

#include "mediankit/pocset.hpp"

namespace mediankit {

struct Violation {
  std::string kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Pocset& P);

// One side of every wall and upward closed.
bool isUltrafilter(const Pocset& P, const Bits& s);

// All ultrafilters in depth-first order (positive side tried first).
// Throws WALL_BUDGET_EXCEEDED above the cap.
std::vector<Point> points(const Pocset& P);
std::vector<Point> points(const Pocset& P, std::size_t wallCap);

// Up-closure of a set of halfspaces.
Bits upClosure(const Pocset& P, const Bits& s);

Point median(const Point& x, const Point& y, const Point& z);
Rational measure(const Pocset& P, const Bits& halfspaces);
Rational distance(const Pocset& P, const Point& x, const Point& y);

// Halfspaces containing every point of A.
Bits sigmaOf(const Pocset& P, const std::vector<Point>& A);

// H(A|B): halfspaces containing B whose complement contains A.
Bits separating(const Pocset& P, const std::vector<Point>& A, const std::vector<Point>& B);
Bits separating(const Pocset& P, const Point& x, const Point& y);

bool inInterval(const Point& x, const Point& y, const Point& z);
std::vector<Point> interval(const Pocset& P, const Point& x, const Point& y);
std::vector<Point> interval(const std::vector<Point>& all, const Point& x, const Point& y);

// Per wall: the side containing C if there is one, else the side of x.
Point gateProject(const Pocset& P, const std::vector<Point>& C, const Point& x);

struct ConvexSet {
  std::vector<Point> points;
  Bits sigma;
};

ConvexSet convexHull(const Pocset& P, const std::vector<Point>& S);
ConvexSet convexHull(const Pocset& P, const std::vector<Point>& all, const std::vector<Point>& S);
// All points lying in every halfspace of sigma.
std::vector<Point> pointsInside(const std::vector<Point>& all, const Bits& sigma);
bool isConvex(const Pocset& P, const std::vector<Point>& all, const std::vector<Point>& S);

Bits inseparableClosure(const Pocset& P, const Bits& S);

bool containsPoint(const std::vector<Point>& set, const Point& x);

// One chosen side per wall, in wall order.
std::vector<std::string> pointLabel(const Pocset& P, const Point& x);
// "#i" indexes points(P); otherwise a comma list of halfspace names whose
// up-closure must be an ultrafilter.
Point parsePoint(const Pocset& P, const std::string& spec);

}  // namespace mediankit
