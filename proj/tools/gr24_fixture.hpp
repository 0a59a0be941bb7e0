#pragma once

// Worked example for Gr_2(C^4), stored as exact expressions. Arrow values
// of the complex roots and the s-family use "sqrt2" and "i" tokens.

namespace mirror::fixtures {

inline constexpr const char* kGr24 = R"json({
  "name": "gr24",
  "n": 3,
  "parabolic": [2],
  "graph": {
    "bullets": 4,
    "stars": 2,
    "boxes": 1,
    "arrows": ["c(2,1)", "d(2,2)", "c(3,1)", "c(3,2)", "d(3,2)", "d(3,3)"]
  },
  "base_solution": {
    "qtilde": "4",
    "rho": {"c(3,1)": "1", "d(3,2)": "1", "c(3,2)": "1", "d(2,2)": "1", "c(2,1)": "2", "d(3,3)": "2"}
  },
  "positive_point": {
    "qtilde": "1",
    "rho": {"c(3,1)": "1/sqrt2", "d(3,2)": "1/sqrt2", "c(3,2)": "1/sqrt2", "d(2,2)": "1/sqrt2",
            "c(2,1)": "2/sqrt2", "d(3,3)": "2/sqrt2"}
  },
  "complex_roots": {
    "qtilde": "1",
    "roots": [
      {"c(3,1)": "i/sqrt2", "d(3,2)": "i/sqrt2", "c(3,2)": "i/sqrt2", "d(2,2)": "i/sqrt2",
       "c(2,1)": "2*i/sqrt2", "d(3,3)": "2*i/sqrt2"},
      {"c(3,1)": "-1/sqrt2", "d(3,2)": "-1/sqrt2", "c(3,2)": "-1/sqrt2", "d(2,2)": "-1/sqrt2",
       "c(2,1)": "-2/sqrt2", "d(3,3)": "-2/sqrt2"},
      {"c(3,1)": "-i/sqrt2", "d(3,2)": "-i/sqrt2", "c(3,2)": "-i/sqrt2", "d(2,2)": "-i/sqrt2",
       "c(2,1)": "-2*i/sqrt2", "d(3,3)": "-2*i/sqrt2"},
      {"c(3,1)": "1/sqrt2", "d(3,2)": "1/sqrt2", "c(3,2)": "1/sqrt2", "d(2,2)": "1/sqrt2",
       "c(2,1)": "2/sqrt2", "d(3,3)": "2/sqrt2"}
    ]
  },
  "missing_points": [
    {"u": [["1", "0", "i", "0"], ["0", "1", "0", "i"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]], "word": [1, 3]},
    {"u": [["1", "0", "-i", "0"], ["0", "1", "0", "-i"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]], "word": [1, 3]}
  ],
  "s_family": [
    {"s": "1", "q": "1", "word": [1, 3],
     "u": [["1", "0", "1", "0"], ["0", "1", "sqrt2", "1"], ["0", "0", "1", "sqrt2"], ["0", "0", "0", "1"]],
     "rho": {"c(3,1)": "1/sqrt2", "d(3,2)": "1/sqrt2", "c(3,2)": "1/sqrt2", "d(2,2)": "1/sqrt2",
             "c(2,1)": "2/sqrt2", "d(3,3)": "2/sqrt2"}},
    {"s": "2", "q": "16", "word": [1, 3],
     "u": [["1", "0", "4", "0"], ["0", "1", "2*sqrt2", "4"], ["0", "0", "1", "2*sqrt2"], ["0", "0", "0", "1"]],
     "rho": {"c(3,1)": "2/sqrt2", "d(3,2)": "2/sqrt2", "c(3,2)": "2/sqrt2", "d(2,2)": "2/sqrt2",
             "c(2,1)": "4/sqrt2", "d(3,3)": "4/sqrt2"}},
    {"s": "i", "q": "1", "word": [1, 3],
     "u": [["1", "0", "-1", "0"], ["0", "1", "i*sqrt2", "-1"], ["0", "0", "1", "i*sqrt2"], ["0", "0", "0", "1"]],
     "rho": {"c(3,1)": "i/sqrt2", "d(3,2)": "i/sqrt2", "c(3,2)": "i/sqrt2", "d(2,2)": "i/sqrt2",
             "c(2,1)": "2*i/sqrt2", "d(3,3)": "2*i/sqrt2"}}
  ]
})json";

}  // namespace mirror::fixtures
