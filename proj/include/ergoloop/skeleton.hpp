#pragma once

#include <ergoloop/arm_model.hpp>
#include <ergoloop/types.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ergoloop {

// One timestamped skeleton sample: 15 named joint positions plus the two
// orientation readings of the wrist sensor pair.
struct SensorFrame {
  double t = 0.0;
  std::map<std::string, Vec3> joints;
  Quat imu_hand;
  Quat imu_forearm;

  const Vec3& joint(const std::string& name) const;
  bool has_joint(const std::string& name) const { return joints.count(name) > 0; }
};

// Joint names required for arm scoring; the rest of the 15 are carried but
// unused. Names are resolved for the active side.
std::vector<std::string> required_joints(Handedness side);
std::string side_joint(Handedness side, const std::string& base);

struct ParseIssue {
  int line = 0;
  std::string message;
};

struct FrameStreamResult {
  std::vector<SensorFrame> frames;
  std::vector<ParseIssue> issues;
};

// Parses line-delimited JSON frames. Offending lines are reported with their
// line numbers; valid frames are returned in stream order. Timestamps must be
// strictly increasing.
FrameStreamResult parse_frame_stream(std::istream& in, Handedness side = Handedness::Right);

// Strict variant: throws std::runtime_error with the first issue message.
std::vector<SensorFrame> parse_frame_stream_strict(std::istream& in,
                                                   Handedness side = Handedness::Right);

void validate_frame(const SensorFrame& frame, Handedness side);

std::string frame_to_json_line(const SensorFrame& frame);

// Builds a full 15-joint synthetic frame for a simulated arm configuration.
// The generated frame, scored with an identity calibration, reproduces the
// configuration's angles.
SensorFrame synth_frame(const ArmConfiguration& config, const Anthropometrics& anthro,
                        const Vec3& shoulder_world, Handedness side, double t = 0.0);

// Synthetic frame of the calibration posture (upper arm vertical, elbow at
// 90, wrist neutral).
SensorFrame calibration_frame(const Anthropometrics& anthro, const Vec3& shoulder_world,
                              Handedness side, double t = 0.0);

}  // namespace ergoloop
