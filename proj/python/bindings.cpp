#include <pybind11/pybind11.h>

PYBIND11_MODULE(_easyq, m) { m.doc() = "placeholder"; }
