/**
 * Service documents captured verbatim from the running backend over the
 * KTP 2593 fixture; tests assert the UI renders these served values.
 */
import type { ResultDoc, SensitivityDoc, SessionDoc } from '../src/types.js';

export const KTP_RESULT: ResultDoc = {
  "osr": 0.6105263157894737,
  "maf": -0.03394270001683481,
  "dec": 0.5765836157726388,
  "recommendation": "AgileRisky",
  "borderline": false,
  "clamped": false,
  "warnings": [],
  "config_snapshot": {
    "log_base": 10.0,
    "threshold": 0.5,
    "borderline_margin": 0.05,
    "clamp_dec": true
  }
};

export const KTP_WHATIF_R07: ResultDoc = {
  "osr": 0.6631578947368421,
  "maf": -0.029355848663208492,
  "dec": 0.6338020460736336,
  "recommendation": "AgileRisky",
  "borderline": false,
  "clamped": false,
  "warnings": [],
  "config_snapshot": {
    "log_base": 10.0,
    "threshold": 0.5,
    "borderline_margin": 0.05,
    "clamp_dec": true
  },
  "ephemeral": true
};

export const KTP_WHATIF_NEUTRAL: ResultDoc = {
  "osr": 0.6105263157894737,
  "maf": 0.0,
  "dec": 0.6105263157894737,
  "recommendation": "AgileRisky",
  "borderline": false,
  "clamped": false,
  "warnings": [],
  "config_snapshot": {
    "log_base": 10.0,
    "threshold": 0.5,
    "borderline_margin": 0.05,
    "clamp_dec": true
  },
  "ephemeral": true
};

export const KTP_SENSITIVITY: SensitivityDoc = {
  "gradient": [
    {
      "factor_id": "R01",
      "value": 0.057218430300994744
    },
    {
      "factor_id": "R02",
      "value": 0.057218430300994744
    },
    {
      "factor_id": "R03",
      "value": 0.057218430300994744
    },
    {
      "factor_id": "R04",
      "value": 0.057218430300994744
    },
    {
      "factor_id": "R05",
      "value": 0.057218430300994744
    },
    {
      "factor_id": "R06",
      "value": 0.057218430300994744
    },
    {
      "factor_id": "R07",
      "value": 0.057218430300994744
    },
    {
      "factor_id": "R08",
      "value": 0.057218430300994744
    },
    {
      "factor_id": "R09",
      "value": 0.057218430300994744
    },
    {
      "factor_id": "R10",
      "value": 0.057218430300994744
    },
    {
      "factor_id": "R11",
      "value": 0.057218430300994744
    },
    {
      "factor_id": "R12",
      "value": 0.057218430300994744
    },
    {
      "factor_id": "R13",
      "value": 0.057218430300994744
    },
    {
      "factor_id": "R14",
      "value": 0.057218430300994744
    },
    {
      "factor_id": "R15",
      "value": 0.057218430300994744
    },
    {
      "factor_id": "R16",
      "value": 0.057218430300994744
    },
    {
      "factor_id": "R17",
      "value": 0.057218430300994744
    },
    {
      "factor_id": "R18",
      "value": 0.057218430300994744
    },
    {
      "factor_id": "R19",
      "value": 0.057218430300994744
    }
  ],
  "tornado": [
    {
      "factor_id": "R01",
      "dec_at_w0": 0.5308088715318431,
      "dec_at_w1": 0.5880273018328379,
      "swing": 0.05721843030099483
    },
    {
      "factor_id": "R02",
      "dec_at_w0": 0.5308088715318431,
      "dec_at_w1": 0.5880273018328379,
      "swing": 0.05721843030099483
    },
    {
      "factor_id": "R03",
      "dec_at_w0": 0.5365307145619426,
      "dec_at_w1": 0.5937491448629374,
      "swing": 0.05721843030099483
    },
    {
      "factor_id": "R04",
      "dec_at_w0": 0.5308088715318431,
      "dec_at_w1": 0.5880273018328379,
      "swing": 0.05721843030099483
    },
    {
      "factor_id": "R06",
      "dec_at_w0": 0.5479744006221414,
      "dec_at_w1": 0.6051928309231362,
      "swing": 0.05721843030099483
    },
    {
      "factor_id": "R11",
      "dec_at_w0": 0.5479744006221414,
      "dec_at_w1": 0.6051928309231362,
      "swing": 0.05721843030099483
    },
    {
      "factor_id": "R12",
      "dec_at_w0": 0.5308088715318431,
      "dec_at_w1": 0.5880273018328379,
      "swing": 0.05721843030099483
    },
    {
      "factor_id": "R16",
      "dec_at_w0": 0.5308088715318431,
      "dec_at_w1": 0.5880273018328379,
      "swing": 0.05721843030099483
    },
    {
      "factor_id": "R17",
      "dec_at_w0": 0.5365307145619426,
      "dec_at_w1": 0.5937491448629374,
      "swing": 0.05721843030099483
    },
    {
      "factor_id": "R19",
      "dec_at_w0": 0.5308088715318431,
      "dec_at_w1": 0.5880273018328379,
      "swing": 0.05721843030099483
    },
    {
      "factor_id": "R05",
      "dec_at_w0": 0.542252557592042,
      "dec_at_w1": 0.5994709878930368,
      "swing": 0.057218430300994716
    },
    {
      "factor_id": "R07",
      "dec_at_w0": 0.5765836157726388,
      "dec_at_w1": 0.6338020460736336,
      "swing": 0.057218430300994716
    },
    {
      "factor_id": "R08",
      "dec_at_w0": 0.5765836157726388,
      "dec_at_w1": 0.6338020460736336,
      "swing": 0.057218430300994716
    },
    {
      "factor_id": "R09",
      "dec_at_w0": 0.5193651854716441,
      "dec_at_w1": 0.5765836157726388,
      "swing": 0.057218430300994716
    },
    {
      "factor_id": "R10",
      "dec_at_w0": 0.5765836157726388,
      "dec_at_w1": 0.6338020460736336,
      "swing": 0.057218430300994716
    },
    {
      "factor_id": "R13",
      "dec_at_w0": 0.5193651854716441,
      "dec_at_w1": 0.5765836157726388,
      "swing": 0.057218430300994716
    },
    {
      "factor_id": "R14",
      "dec_at_w0": 0.542252557592042,
      "dec_at_w1": 0.5994709878930368,
      "swing": 0.057218430300994716
    },
    {
      "factor_id": "R18",
      "dec_at_w0": 0.5594180866823405,
      "dec_at_w1": 0.6166365169833352,
      "swing": 0.057218430300994716
    },
    {
      "factor_id": "R15",
      "dec_at_w0": 0.5250870285017436,
      "dec_at_w1": 0.5823054588027382,
      "swing": 0.057218430300994605
    }
  ],
  "threshold_ava": 0.1844311820321525,
  "warnings": []
};

export const KTP_SESSION: SessionDoc = {
  "schema_version": 1,
  "id": "ktp-2593",
  "title": "KTP No. 2593 development project",
  "created_at": "2011-06-30T12:00:00.000000Z",
  "updated_at": "2011-06-30T12:00:00.000000Z",
  "revision": 0,
  "taxonomy": {
    "name": "WAINGE-19",
    "factors": [
      {
        "id": "R01",
        "description": "The customer representative cannot be always available and present alongside the development process",
        "category": "IntrinsicToAgile",
        "intrinsic_risk": 1.0,
        "source": null
      },
      {
        "id": "R02",
        "description": "A final “weaker” (e.g., less complete than expected) User Acceptance Test is likely",
        "category": "IntrinsicToAgile",
        "intrinsic_risk": 1.0,
        "source": null
      },
      {
        "id": "R03",
        "description": "A less reliable initial prediction on time and budget is to be expected",
        "category": "IntrinsicToAgile",
        "intrinsic_risk": 1.0,
        "source": null
      },
      {
        "id": "R04",
        "description": "Documentation cannot to be considered and thoroughly prepared as a critical asset (Turk et al., 2002)",
        "category": "IntrinsicToAgile",
        "intrinsic_risk": 1.0,
        "source": "Turk et al., 2002"
      },
      {
        "id": "R05",
        "description": "An agile methodology, with its set of practices, as such, can be less flexible than expected by an agile approach overall (Turk et al., 2002; Yegge, 2006; Halliwell, 2008)",
        "category": "IntrinsicToAgile",
        "intrinsic_risk": 1.0,
        "source": "Turk et al., 2002; Yegge, 2006; Halliwell, 2008"
      },
      {
        "id": "R06",
        "description": "Little experience and somehow more relaxed discipline in Agile could reflect negatively on project management (Turk et al., 2002)",
        "category": "IntrinsicToAgile",
        "intrinsic_risk": 1.0,
        "source": "Turk et al., 2002"
      },
      {
        "id": "R07",
        "description": "Limited or unsustainable support for distributed development environments is likely to occur (Turk et al., 2002)",
        "category": "IntrinsicToAgile",
        "intrinsic_risk": 1.0,
        "source": "Turk et al., 2002"
      },
      {
        "id": "R08",
        "description": "Outsourcing and/or subcontracting is likely to be more difficult to manage (Turk et al., 2002)",
        "category": "IntrinsicToAgile",
        "intrinsic_risk": 1.0,
        "source": "Turk et al., 2002"
      },
      {
        "id": "R09",
        "description": "Limited support and/or opportunities for building reusable artifacts is likely to occur (Turk et al., 2002)",
        "category": "IntrinsicToAgile",
        "intrinsic_risk": 1.0,
        "source": "Turk et al., 2002"
      },
      {
        "id": "R10",
        "description": "Limited or unsustainable support for development involving large teams is likely to occur (Turk et al., 2002)",
        "category": "IntrinsicToAgile",
        "intrinsic_risk": 1.0,
        "source": "Turk et al., 2002"
      },
      {
        "id": "R11",
        "description": "Limited supported for developing safety-critical software is likely to occur (Turk et al., 2002)",
        "category": "IntrinsicToAgile",
        "intrinsic_risk": 1.0,
        "source": "Turk et al., 2002"
      },
      {
        "id": "R12",
        "description": "Limited support for developing large, complex software is likely to occur (Turk et al., 2002; Dybå and Dingsøy, 2008)",
        "category": "ConsultancyConflict",
        "intrinsic_risk": 1.0,
        "source": "Turk et al., 2002; Dybå and Dingsøy, 2008"
      },
      {
        "id": "R13",
        "description": "The lack of focus on architecture is bound to engender suboptimal design-decisions (Dybå and Dingsøy, 2008)",
        "category": "IntrinsicToAgile",
        "intrinsic_risk": 1.0,
        "source": "Dybå and Dingsøy, 2008"
      },
      {
        "id": "R14",
        "description": "Because of social values embraced by Agile, decision making can be less effective than expected (Dybå and Dingsøy, 2008)",
        "category": "IntrinsicToAgile",
        "intrinsic_risk": 1.0,
        "source": "Dybå and Dingsøy, 2008"
      },
      {
        "id": "R15",
        "description": "Agile developers/consultants might not be around for long (Halliwell, 2008)",
        "category": "ConsultancyConflict",
        "intrinsic_risk": 1.0,
        "source": "Halliwell, 2008"
      },
      {
        "id": "R16",
        "description": "Agile methods could tackle only the “trivial” part of a project and leave behind the tricky, hard ones (Halliwell, 2008)",
        "category": "IntrinsicToAgile",
        "intrinsic_risk": 1.0,
        "source": "Halliwell, 2008"
      },
      {
        "id": "R17",
        "description": "Development process and outcomes could depend on the quality of the hiring process (people are more important than processes and tools) (Halliwell, 2008)",
        "category": "AdjacentProcess",
        "intrinsic_risk": 1.0,
        "source": "Halliwell, 2008"
      },
      {
        "id": "R18",
        "description": "Adaptive planning could be “practically” (for instance, when responding to a change) translated into no long-term planning (Halliwell, 2008)",
        "category": "IntrinsicToAgile",
        "intrinsic_risk": 1.0,
        "source": "Halliwell, 2008"
      },
      {
        "id": "R19",
        "description": "Planning poker, as a variation of Wideband Delphi (Boehm, 1981), and other distributed decision-making strategies could be affected (both unwillingly or otherwise) by individuals who are not focused on the actual development",
        "category": "AdjacentProcess",
        "intrinsic_risk": 1.0,
        "source": "Tørresdal, 2007"
      }
    ]
  },
  "problems": [
    {
      "id": "P1",
      "statement": "Moving the software out of customer premises and reducing the amount of expected customization by the supplier (IMC)"
    },
    {
      "id": "P2",
      "statement": "Improving the maintenance processes and making the software less platform-sensitive"
    },
    {
      "id": "P3",
      "statement": "Supporting customers in managing and accessing from everywhere their front-end GUI without affecting IMC overall control on server-side main functionalities and authorization processes"
    }
  ],
  "team": [
    {
      "member_id": "m1",
      "name": "Stakeholder 1",
      "role": "Academic coordinator"
    },
    {
      "member_id": "m2",
      "name": "Stakeholder 2",
      "role": "Academic supervisor"
    },
    {
      "member_id": "m3",
      "name": "Stakeholder 3",
      "role": "Academic associate"
    },
    {
      "member_id": "m4",
      "name": "Stakeholder 4",
      "role": "Company technical director"
    },
    {
      "member_id": "m5",
      "name": "Stakeholder 5",
      "role": "Company supervisor"
    }
  ],
  "responses": [],
  "weight_overrides": [
    {
      "factor_id": "R01",
      "weight": 0.8
    },
    {
      "factor_id": "R02",
      "weight": 0.8
    },
    {
      "factor_id": "R03",
      "weight": 0.7
    },
    {
      "factor_id": "R04",
      "weight": 0.8
    },
    {
      "factor_id": "R05",
      "weight": 0.6
    },
    {
      "factor_id": "R06",
      "weight": 0.5
    },
    {
      "factor_id": "R07",
      "weight": 0.0
    },
    {
      "factor_id": "R08",
      "weight": 0.0
    },
    {
      "factor_id": "R09",
      "weight": 1.0
    },
    {
      "factor_id": "R10",
      "weight": 0.0
    },
    {
      "factor_id": "R11",
      "weight": 0.5
    },
    {
      "factor_id": "R12",
      "weight": 0.8
    },
    {
      "factor_id": "R13",
      "weight": 1.0
    },
    {
      "factor_id": "R14",
      "weight": 0.6
    },
    {
      "factor_id": "R15",
      "weight": 0.9
    },
    {
      "factor_id": "R16",
      "weight": 0.8
    },
    {
      "factor_id": "R17",
      "weight": 0.7
    },
    {
      "factor_id": "R18",
      "weight": 0.3
    },
    {
      "factor_id": "R19",
      "weight": 0.8
    }
  ],
  "attitudes": [],
  "ava_override": 0.4,
  "agile_candidate": "FDD",
  "non_agile_candidate": "Spiral Model",
  "config": {
    "log_base": 10.0,
    "threshold": 0.5,
    "borderline_margin": 0.05,
    "clamp_dec": true
  },
  "cached_result": null
};
