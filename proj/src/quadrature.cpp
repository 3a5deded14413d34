// quadrature rules (see include/rsphere/quadrature.hpp)
