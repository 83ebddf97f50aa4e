#include "zetacyl/quadrature.hpp"

namespace zetacyl::quad {

// Nodes/weights of the (G7, K15) pair; abscissa[i] for i odd belongs to the
// Gauss subset. Values from the usual QUADPACK tables.
const double Gk15Nodes::abscissa[8] = {
    0.000000000000000000000000000000000,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
};

const double Gk15Nodes::wk[8] = {
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
};

// Gauss weights for abscissa indices 0, 2, 4, 6.
const double Gk15Nodes::wg[4] = {
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082,
};

}  // namespace zetacyl::quad
