#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <ergoloop/simulation.hpp>

#include <sstream>

namespace py = pybind11;
using namespace ergoloop;

namespace {

ArmAngles angles_from_tuple(double as, double ac, double bs, double bt, double gb, double gt) {
  ArmAngles a;
  a.alpha_s = as;
  a.alpha_c = ac;
  a.beta_s = bs;
  a.beta_t = bt;
  a.gamma_b = gb;
  a.gamma_t = gt;
  return a;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Closed-loop robot-assisted ergonomics engine";

  py::enum_<Handedness>(m, "Handedness")
      .value("RIGHT", Handedness::Right)
      .value("LEFT", Handedness::Left);

  py::class_<Vec3>(m, "Vec3")
      .def(py::init<>())
      .def(py::init([](double x, double y, double z) { return Vec3{x, y, z}; }))
      .def_readwrite("x", &Vec3::x)
      .def_readwrite("y", &Vec3::y)
      .def_readwrite("z", &Vec3::z)
      .def("__repr__", [](const Vec3& v) {
        std::ostringstream s;
        s << "Vec3(" << v.x << ", " << v.y << ", " << v.z << ")";
        return s.str();
      });

  py::class_<ArmAngles>(m, "ArmAngles")
      .def(py::init(&angles_from_tuple), py::arg("alpha_s") = 0.0, py::arg("alpha_c") = 0.0,
           py::arg("beta_s") = 90.0, py::arg("beta_t") = 0.0, py::arg("gamma_b") = 0.0,
           py::arg("gamma_t") = 0.0)
      .def_readwrite("alpha_s", &ArmAngles::alpha_s)
      .def_readwrite("alpha_c", &ArmAngles::alpha_c)
      .def_readwrite("beta_s", &ArmAngles::beta_s)
      .def_readwrite("beta_t", &ArmAngles::beta_t)
      .def_readwrite("gamma_b", &ArmAngles::gamma_b)
      .def_readwrite("gamma_t", &ArmAngles::gamma_t)
      .def_readwrite("gamma_w", &ArmAngles::gamma_w);

  py::class_<RulaBreakdown>(m, "RulaBreakdown")
      .def_readonly("upper", &RulaBreakdown::upper)
      .def_readonly("lower", &RulaBreakdown::lower)
      .def_readonly("wrist", &RulaBreakdown::wrist)
      .def_readonly("twist", &RulaBreakdown::twist)
      .def_readonly("arm_score", &RulaBreakdown::arm_score);

  m.def("lower_arm_sagittal", &lower_arm_sagittal, py::arg("hand"), py::arg("elbow"),
        py::arg("shoulder"));
  m.def("upper_arm_sagittal", &upper_arm_sagittal, py::arg("torso"), py::arg("neck"),
        py::arg("elbow"), py::arg("shoulder"));
  m.def("upper_arm_coronal", &upper_arm_coronal, py::arg("neck"), py::arg("elbow"),
        py::arg("shoulder"));
  m.def("lower_arm_transversal", &lower_arm_transversal, py::arg("neck"), py::arg("shoulder"),
        py::arg("hand"), py::arg("elbow"));

  m.def("table_a", &table_a, py::arg("upper"), py::arg("lower"), py::arg("wrist"),
        py::arg("twist"));
  m.def(
      "score",
      [](const ArmAngles& a) { return score(a, ScoringConfig{}); },
      py::arg("angles"));

  m.def(
      "classify",
      [](const ArmAngles& a) {
        auto breakdown = score(a, ScoringConfig{});
        std::vector<std::pair<std::string, double>> out;
        for (const Deviation& d : classify(a, breakdown, PlannerConfig{}))
          out.emplace_back(cause_name(d.cause), d.magnitude);
        return out;
      },
      py::arg("angles"), "Triggered causes in priority order as (name, magnitude) pairs");

  m.def(
      "compute_response",
      [](const std::string& cause, double magnitude, double a, double b, double tool,
         Handedness side) {
        auto c = cause_from_name(cause);
        if (!c) throw std::invalid_argument("unknown cause: " + cause);
        CalibrationProfile p;
        p.a = a;
        p.b = b;
        p.tool = tool;
        ResponseCommand r = compute_response({*c, magnitude}, p, side);
        return py::make_tuple(py::make_tuple(r.translation.x, r.translation.y, r.translation.z),
                              r.rotation_z);
      },
      py::arg("cause"), py::arg("magnitude"), py::arg("a") = 0.30, py::arg("b") = 0.25,
      py::arg("tool") = 0.25, py::arg("side") = Handedness::Right,
      "Workpiece correction as ((tx, ty, tz), rot_z)");

  m.def(
      "roundtrip_angles",
      [](const ArmAngles& truth) {
        Anthropometrics anthro;
        ArmConfiguration c;
        c.alpha_s = truth.alpha_s;
        c.alpha_c = truth.alpha_c;
        c.beta_s = truth.beta_s;
        c.beta_t = truth.beta_t;
        c.gamma_b = truth.gamma_b;
        c.gamma_t = truth.gamma_t;
        Vec3 shoulder{0, 0, anthro.shoulder_height};
        SensorFrame f = synth_frame(c, anthro, shoulder, Handedness::Right);
        CalibrationProfile p =
            calibrate({calibration_frame(anthro, shoulder, Handedness::Right)}, anthro.tool);
        return compute_arm_angles(f, p, Handedness::Right);
      },
      py::arg("angles"),
      "Synthesize a frame for ground-truth angles and measure them back");

  m.def(
      "solve_arm",
      [](const Vec3& target, double a, double b, double tool) {
        Anthropometrics anthro;
        anthro.a = a;
        anthro.b = b;
        anthro.tool = tool;
        ReachSolver solver(anthro);
        ReachResult r = solver.solve_tip(target);
        py::dict d;
        d["alpha_s"] = r.config.alpha_s;
        d["alpha_c"] = r.config.alpha_c;
        d["beta_s"] = r.config.beta_s;
        d["beta_t"] = r.config.beta_t;
        d["gamma_b"] = r.config.gamma_b;
        d["gamma_t"] = r.config.gamma_t;
        d["tip"] = py::make_tuple(r.tip.x, r.tip.y, r.tip.z);
        d["saturated"] = r.saturated;
        return d;
      },
      py::arg("target"), py::arg("a") = 0.30, py::arg("b") = 0.25, py::arg("tool") = 0.25,
      "Analytic reach to a tool-tip target, shoulder at the origin");

  m.def(
      "run_scenario_json",
      [](const std::string& scenario_json) {
        Scenario sc = Scenario::from_json(scenario_json);
        SimOutcome out = run_scenario(sc, RunConfig{});
        return out.summary_json(sc);
      },
      py::arg("scenario_json"), "Run a scenario and return the summary JSON");

  m.def(
      "run_default_experiment_json",
      [](double dwell_s) {
        ExperimentSpec spec = ExperimentSpec::default_spec();
        spec.dwell_s = dwell_s;
        ExperimentOutput out = run_experiment(spec, RunConfig{});
        return out.report.to_json();
      },
      py::arg("dwell_s") = 2.0, "Run the default box experiment, return the report JSON");

  m.def("default_experiment_spec_json",
        []() { return ExperimentSpec::default_spec().to_json(); });
}
