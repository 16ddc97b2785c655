// Recorded API payloads for the offline demo mode and the test fixture
// server. Generated by scripts/record_api_fixture.py from a real pipeline
// run over the bundled mini corpus -- regenerate rather than edit.

import type { CandidateRecord, TopicInfo } from "./types.js";

export const RECORDED_TOPICS: TopicInfo[] = [
  {
    "topic": "harbor lighthouses",
    "documents": 4,
    "candidates": 73
  },
  {
    "topic": "mountain railways",
    "documents": 2,
    "candidates": 16
  },
  {
    "topic": "river ferries",
    "documents": 1,
    "candidates": 0
  },
  {
    "topic": "urban beekeeping",
    "documents": 3,
    "candidates": 18
  }
];

export const RECORDED_CANDIDATES: Record<string, CandidateRecord[]> = {
  "harbor lighthouses": [
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:2",
        "doc_id": "5683dfdad044",
        "index": 2,
        "text": "Newspapers called it the quietest strike in history.",
        "token_count": 8
      },
      "segment_b": {
        "segment_id": "69a2df121d57:1",
        "doc_id": "69a2df121d57",
        "index": 1,
        "text": "Its keeper trimmed the oil lamp every night because the harbor entrance was narrow and dangerous.",
        "token_count": 16
      },
      "doc_similarity": 0.31065047890396247,
      "segment_similarity": 0.03741396253513492,
      "scores": {
        "Comparison": 1.223060357720517e-11,
        "Contingency": 0.99920183943163,
        "Expansion": 0.0007981602036508426,
        "Temporal": 3.5248032114830576e-10,
        "None": 8.265162411116171e-15
      },
      "predicted": "Contingency",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:2",
        "doc_id": "5683dfdad044",
        "index": 2,
        "text": "Newspapers called it the quietest strike in history.",
        "token_count": 8
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:1",
        "doc_id": "7c1686f37ecf",
        "index": 1,
        "text": "Local fishermen funded the first wooden tower because the harbor channel froze each winter and the lamp marked open water.",
        "token_count": 20
      },
      "doc_similarity": 0.2711869977390273,
      "segment_similarity": 0.044559083381614815,
      "scores": {
        "Comparison": 9.986174098533106e-12,
        "Contingency": 0.9984285285636088,
        "Expansion": 0.0015714707824342764,
        "Temporal": 6.439631776223357e-10,
        "None": 7.631511277306402e-15
      },
      "predicted": "Contingency",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "69a2df121d57:4",
        "doc_id": "69a2df121d57",
        "index": 4,
        "text": "Dr. Alden wrote the first guide to the lighthouse optics.",
        "token_count": 10
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:1",
        "doc_id": "7c1686f37ecf",
        "index": 1,
        "text": "Local fishermen funded the first wooden tower because the harbor channel froze each winter and the lamp marked open water.",
        "token_count": 20
      },
      "doc_similarity": 0.3323736531991911,
      "segment_similarity": 0.15361574243041234,
      "scores": {
        "Comparison": 1.6695093856596792e-09,
        "Contingency": 0.9978148573009491,
        "Expansion": 0.0021851305612497628,
        "Temporal": 1.046535283352979e-08,
        "None": 2.9390792942327385e-12
      },
      "predicted": "Contingency",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:4",
        "doc_id": "20ac419cbf4e",
        "index": 4,
        "text": "The lighthouse was automated in 1972 and the last keeper retired.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "69a2df121d57:1",
        "doc_id": "69a2df121d57",
        "index": 1,
        "text": "Its keeper trimmed the oil lamp every night because the harbor entrance was narrow and dangerous.",
        "token_count": 16
      },
      "doc_similarity": 0.460477100064572,
      "segment_similarity": 0.21110039656366283,
      "scores": {
        "Comparison": 1.0526464376389342e-06,
        "Contingency": 0.9926165886193014,
        "Expansion": 0.007380984432759486,
        "Temporal": 1.3654098634232666e-06,
        "None": 8.891638020034622e-09
      },
      "predicted": "Contingency",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:0",
        "doc_id": "20ac419cbf4e",
        "index": 0,
        "text": "Penmarrow Light guards the western harbor wall and its shifting sandbar.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "69a2df121d57:1",
        "doc_id": "69a2df121d57",
        "index": 1,
        "text": "Its keeper trimmed the oil lamp every night because the harbor entrance was narrow and dangerous.",
        "token_count": 16
      },
      "doc_similarity": 0.460477100064572,
      "segment_similarity": 0.15552995026423247,
      "scores": {
        "Comparison": 1.3286978112078529e-06,
        "Contingency": 0.9920655895096712,
        "Expansion": 0.007931392738172512,
        "Temporal": 1.6771216802870407e-06,
        "None": 1.1932664771342385e-08
      },
      "predicted": "Contingency",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "69a2df121d57:0",
        "doc_id": "69a2df121d57",
        "index": 0,
        "text": "The Stormwick lighthouse was built on the granite headland in 1874.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:1",
        "doc_id": "7c1686f37ecf",
        "index": 1,
        "text": "Local fishermen funded the first wooden tower because the harbor channel froze each winter and the lamp marked open water.",
        "token_count": 20
      },
      "doc_similarity": 0.3323736531991911,
      "segment_similarity": 0.08145004397559391,
      "scores": {
        "Comparison": 6.508319405528846e-07,
        "Contingency": 0.989538667521611,
        "Expansion": 0.010459310656633273,
        "Temporal": 1.3655119073022438e-06,
        "None": 5.477908074190095e-09
      },
      "predicted": "Contingency",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:2",
        "doc_id": "5683dfdad044",
        "index": 2,
        "text": "Newspapers called it the quietest strike in history.",
        "token_count": 8
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:0",
        "doc_id": "7c1686f37ecf",
        "index": 0,
        "text": "The Gullholm beacon is the oldest lighthouse on the northern coast.",
        "token_count": 11
      },
      "doc_similarity": 0.2711869977390273,
      "segment_similarity": 0.06086693115589629,
      "scores": {
        "Comparison": 1.0094258116729739e-05,
        "Contingency": 2.2191383610112527e-09,
        "Expansion": 0.00015634478350206213,
        "Temporal": 0.9888272189058105,
        "None": 0.011006339833432337
      },
      "predicted": "Temporal",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "69a2df121d57:4",
        "doc_id": "69a2df121d57",
        "index": 4,
        "text": "Dr. Alden wrote the first guide to the lighthouse optics.",
        "token_count": 10
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:2",
        "doc_id": "7c1686f37ecf",
        "index": 2,
        "text": "When the stone tower replaced it, the keeper planted a garden below the cliffs.",
        "token_count": 14
      },
      "doc_similarity": 0.3323736531991911,
      "segment_similarity": 0.10229661604717853,
      "scores": {
        "Comparison": 2.9500603587092235e-09,
        "Contingency": 0.987065538074513,
        "Expansion": 0.01293437437395183,
        "Temporal": 8.459064699190023e-08,
        "None": 1.082801405461815e-11
      },
      "predicted": "Contingency",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.038461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:2",
        "doc_id": "5683dfdad044",
        "index": 2,
        "text": "Newspapers called it the quietest strike in history.",
        "token_count": 8
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:2",
        "doc_id": "7c1686f37ecf",
        "index": 2,
        "text": "When the stone tower replaced it, the keeper planted a garden below the cliffs.",
        "token_count": 14
      },
      "doc_similarity": 0.2711869977390273,
      "segment_similarity": 0.1311088979819728,
      "scores": {
        "Comparison": 8.080345291000949e-12,
        "Contingency": 0.9864948349543485,
        "Expansion": 0.013505158285558913,
        "Temporal": 6.7519916418506154e-09,
        "None": 2.027809835566867e-14
      },
      "predicted": "Contingency",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.038461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:4",
        "doc_id": "20ac419cbf4e",
        "index": 4,
        "text": "The lighthouse was automated in 1972 and the last keeper retired.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:1",
        "doc_id": "7c1686f37ecf",
        "index": 1,
        "text": "Local fishermen funded the first wooden tower because the harbor channel froze each winter and the lamp marked open water.",
        "token_count": 20
      },
      "doc_similarity": 0.3421423803957849,
      "segment_similarity": 0.1040577517363412,
      "scores": {
        "Comparison": 1.5491140563331788e-06,
        "Contingency": 0.9863397295475396,
        "Expansion": 0.013655779949521104,
        "Temporal": 2.925066884972045e-06,
        "None": 1.6321998029965195e-08
      },
      "predicted": "Contingency",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:0",
        "doc_id": "20ac419cbf4e",
        "index": 0,
        "text": "Penmarrow Light guards the western harbor wall and its shifting sandbar.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:1",
        "doc_id": "7c1686f37ecf",
        "index": 1,
        "text": "Local fishermen funded the first wooden tower because the harbor channel froze each winter and the lamp marked open water.",
        "token_count": 20
      },
      "doc_similarity": 0.3421423803957849,
      "segment_similarity": 0.09519781657753644,
      "scores": {
        "Comparison": 1.9542797566436903e-06,
        "Contingency": 0.9853756096299863,
        "Expansion": 0.014618834020584257,
        "Temporal": 3.5801716269152405e-06,
        "None": 2.1898045821571438e-08
      },
      "predicted": "Contingency",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:2",
        "doc_id": "5683dfdad044",
        "index": 2,
        "text": "Newspapers called it the quietest strike in history.",
        "token_count": 8
      },
      "segment_b": {
        "segment_id": "69a2df121d57:0",
        "doc_id": "69a2df121d57",
        "index": 0,
        "text": "The Stormwick lighthouse was built on the granite headland in 1874.",
        "token_count": 11
      },
      "doc_similarity": 0.31065047890396247,
      "segment_similarity": 0.07879171640520528,
      "scores": {
        "Comparison": 6.392901358920792e-08,
        "Contingency": 9.977108639359634e-08,
        "Expansion": 0.024617186808827397,
        "Temporal": 0.9753569251419745,
        "None": 2.5724349098080284e-05
      },
      "predicted": "Temporal",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:3",
        "doc_id": "20ac419cbf4e",
        "index": 3,
        "text": "Although the lamp was small, its beam reached the outer anchorage because the tower stood on high cliffs.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "5683dfdad044:2",
        "doc_id": "5683dfdad044",
        "index": 2,
        "text": "Newspapers called it the quietest strike in history.",
        "token_count": 8
      },
      "doc_similarity": 0.3128683402987789,
      "segment_similarity": 0.04742195352643495,
      "scores": {
        "Comparison": 5.456681622220431e-05,
        "Contingency": 0.9623834789970378,
        "Expansion": 0.03747970525080931,
        "Temporal": 8.162329332416303e-05,
        "None": 6.256426066279513e-07
      },
      "predicted": "Contingency",
      "importance_a": 0.038461538461538464,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "69a2df121d57:0",
        "doc_id": "69a2df121d57",
        "index": 0,
        "text": "The Stormwick lighthouse was built on the granite headland in 1874.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:2",
        "doc_id": "7c1686f37ecf",
        "index": 2,
        "text": "When the stone tower replaced it, the keeper planted a garden below the cliffs.",
        "token_count": 14
      },
      "doc_similarity": 0.3323736531991911,
      "segment_similarity": 0.10203112707278084,
      "scores": {
        "Comparison": 1.4666428838224094e-06,
        "Contingency": 0.9587917865298687,
        "Expansion": 0.04119869080416382,
        "Temporal": 8.03513604206007e-06,
        "None": 2.088704146065933e-08
      },
      "predicted": "Contingency",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.038461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:1",
        "doc_id": "5683dfdad044",
        "index": 1,
        "text": "The strike ended after the harbor board doubled the oil allowance and paid for a second keeper at every offshore light.",
        "token_count": 21
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:0",
        "doc_id": "7c1686f37ecf",
        "index": 0,
        "text": "The Gullholm beacon is the oldest lighthouse on the northern coast.",
        "token_count": 11
      },
      "doc_similarity": 0.2711869977390273,
      "segment_similarity": 0.11972503051598335,
      "scores": {
        "Comparison": 2.0039167831725252e-05,
        "Contingency": 0.030641438963107056,
        "Expansion": 0.9538669157015683,
        "Temporal": 0.01543399273640282,
        "None": 3.761343108996387e-05
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:0",
        "doc_id": "5683dfdad044",
        "index": 0,
        "text": "In 1901 the lighthouse keepers of the southern harbor district refused to light the lamps for three nights.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:0",
        "doc_id": "7c1686f37ecf",
        "index": 0,
        "text": "The Gullholm beacon is the oldest lighthouse on the northern coast.",
        "token_count": 11
      },
      "doc_similarity": 0.2711869977390273,
      "segment_similarity": 0.17100619670326772,
      "scores": {
        "Comparison": 2.063172409572332e-05,
        "Contingency": 0.03574178604526609,
        "Expansion": 0.9504193543223627,
        "Temporal": 0.013784898066060291,
        "None": 3.332984221516732e-05
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:4",
        "doc_id": "20ac419cbf4e",
        "index": 4,
        "text": "The lighthouse was automated in 1972 and the last keeper retired.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:2",
        "doc_id": "7c1686f37ecf",
        "index": 2,
        "text": "When the stone tower replaced it, the keeper planted a garden below the cliffs.",
        "token_count": 14
      },
      "doc_similarity": 0.3421423803957849,
      "segment_similarity": 0.166541284899937,
      "scores": {
        "Comparison": 3.7779281900984933e-06,
        "Contingency": 0.9498947707978973,
        "Expansion": 0.05008467358139456,
        "Temporal": 1.6710395331101162e-05,
        "None": 6.729718712078327e-08
      },
      "predicted": "Contingency",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.038461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:0",
        "doc_id": "20ac419cbf4e",
        "index": 0,
        "text": "Penmarrow Light guards the western harbor wall and its shifting sandbar.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:2",
        "doc_id": "7c1686f37ecf",
        "index": 2,
        "text": "When the stone tower replaced it, the keeper planted a garden below the cliffs.",
        "token_count": 14
      },
      "doc_similarity": 0.3421423803957849,
      "segment_similarity": 0.04835691622348731,
      "scores": {
        "Comparison": 4.830738948575644e-06,
        "Contingency": 0.9473129488338937,
        "Expansion": 0.05266190108632913,
        "Temporal": 2.0228200730500774e-05,
        "None": 9.1140098021153e-08
      },
      "predicted": "Contingency",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.038461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:1",
        "doc_id": "5683dfdad044",
        "index": 1,
        "text": "The strike ended after the harbor board doubled the oil allowance and paid for a second keeper at every offshore light.",
        "token_count": 21
      },
      "segment_b": {
        "segment_id": "69a2df121d57:4",
        "doc_id": "69a2df121d57",
        "index": 4,
        "text": "Dr. Alden wrote the first guide to the lighthouse optics.",
        "token_count": 10
      },
      "doc_similarity": 0.31065047890396247,
      "segment_similarity": 0.08313160951862866,
      "scores": {
        "Comparison": 2.7065497656099007e-05,
        "Contingency": 0.04523017502488847,
        "Expansion": 0.9438260994416516,
        "Temporal": 0.01089275223069777,
        "None": 2.390780510593139e-05
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:1",
        "doc_id": "5683dfdad044",
        "index": 1,
        "text": "The strike ended after the harbor board doubled the oil allowance and paid for a second keeper at every offshore light.",
        "token_count": 21
      },
      "segment_b": {
        "segment_id": "69a2df121d57:0",
        "doc_id": "69a2df121d57",
        "index": 0,
        "text": "The Stormwick lighthouse was built on the granite headland in 1874.",
        "token_count": 11
      },
      "doc_similarity": 0.31065047890396247,
      "segment_similarity": 0.08291585921716266,
      "scores": {
        "Comparison": 2.5895911998224473e-05,
        "Contingency": 0.02140444800223486,
        "Expansion": 0.9420583131978751,
        "Temporal": 0.036333230417950765,
        "None": 0.00017811246994082838
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:0",
        "doc_id": "5683dfdad044",
        "index": 0,
        "text": "In 1901 the lighthouse keepers of the southern harbor district refused to light the lamps for three nights.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "69a2df121d57:0",
        "doc_id": "69a2df121d57",
        "index": 0,
        "text": "The Stormwick lighthouse was built on the granite headland in 1874.",
        "token_count": 11
      },
      "doc_similarity": 0.31065047890396247,
      "segment_similarity": 0.15927247441422604,
      "scores": {
        "Comparison": 2.7227888532765114e-05,
        "Contingency": 0.02449491483916546,
        "Expansion": 0.9419645857756537,
        "Temporal": 0.03335112514332054,
        "None": 0.0001621463533275623
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:0",
        "doc_id": "5683dfdad044",
        "index": 0,
        "text": "In 1901 the lighthouse keepers of the southern harbor district refused to light the lamps for three nights.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "69a2df121d57:4",
        "doc_id": "69a2df121d57",
        "index": 4,
        "text": "Dr. Alden wrote the first guide to the lighthouse optics.",
        "token_count": 10
      },
      "doc_similarity": 0.31065047890396247,
      "segment_similarity": 0.17197127484204408,
      "scores": {
        "Comparison": 2.7698317116777355e-05,
        "Contingency": 0.05274564289550387,
        "Expansion": 0.9375528252113761,
        "Temporal": 0.009652758521884176,
        "None": 2.1075054119243802e-05
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "69a2df121d57:3",
        "doc_id": "69a2df121d57",
        "index": 3,
        "text": "After the lamp was electrified in 1936, the keeper's cottage became a small museum about the harbor and its pilots.",
        "token_count": 20
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:0",
        "doc_id": "7c1686f37ecf",
        "index": 0,
        "text": "The Gullholm beacon is the oldest lighthouse on the northern coast.",
        "token_count": 11
      },
      "doc_similarity": 0.3323736531991911,
      "segment_similarity": 0.12360303745216784,
      "scores": {
        "Comparison": 2.184375024096396e-05,
        "Contingency": 0.05323079772751549,
        "Expansion": 0.9365767956897172,
        "Temporal": 0.010147036878782524,
        "None": 2.352595374390166e-05
      },
      "predicted": "Expansion",
      "importance_a": 0.15384615384615385,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:1",
        "doc_id": "20ac419cbf4e",
        "index": 1,
        "text": "The keeper kept a logbook of every ship that entered the harbor at night.",
        "token_count": 14
      },
      "segment_b": {
        "segment_id": "5683dfdad044:2",
        "doc_id": "5683dfdad044",
        "index": 2,
        "text": "Newspapers called it the quietest strike in history.",
        "token_count": 8
      },
      "doc_similarity": 0.3128683402987789,
      "segment_similarity": 0.03917069530223425,
      "scores": {
        "Comparison": 9.539313587442761e-05,
        "Contingency": 0.9030272864875298,
        "Expansion": 0.09663118924624993,
        "Temporal": 0.0002451881036798983,
        "None": 9.430266660062647e-07
      },
      "predicted": "Contingency",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:0",
        "doc_id": "20ac419cbf4e",
        "index": 0,
        "text": "Penmarrow Light guards the western harbor wall and its shifting sandbar.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "69a2df121d57:4",
        "doc_id": "69a2df121d57",
        "index": 4,
        "text": "Dr. Alden wrote the first guide to the lighthouse optics.",
        "token_count": 10
      },
      "doc_similarity": 0.460477100064572,
      "segment_similarity": 0.03661370065037123,
      "scores": {
        "Comparison": 1.1719542593727246e-05,
        "Contingency": 1.0546538343000734e-07,
        "Expansion": 0.0022226450156645258,
        "Temporal": 0.8916991112690591,
        "None": 0.10606641870729926
      },
      "predicted": "Temporal",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:0",
        "doc_id": "20ac419cbf4e",
        "index": 0,
        "text": "Penmarrow Light guards the western harbor wall and its shifting sandbar.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:0",
        "doc_id": "7c1686f37ecf",
        "index": 0,
        "text": "The Gullholm beacon is the oldest lighthouse on the northern coast.",
        "token_count": 11
      },
      "doc_similarity": 0.3421423803957849,
      "segment_similarity": 0.05273056125163166,
      "scores": {
        "Comparison": 3.7374152239148035e-06,
        "Contingency": 1.454688457093046e-07,
        "Expansion": 0.004351884930518785,
        "Temporal": 0.8902998432536405,
        "None": 0.10534438893177112
      },
      "predicted": "Temporal",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:4",
        "doc_id": "20ac419cbf4e",
        "index": 4,
        "text": "The lighthouse was automated in 1972 and the last keeper retired.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:0",
        "doc_id": "7c1686f37ecf",
        "index": 0,
        "text": "The Gullholm beacon is the oldest lighthouse on the northern coast.",
        "token_count": 11
      },
      "doc_similarity": 0.3421423803957849,
      "segment_similarity": 0.1816041242943481,
      "scores": {
        "Comparison": 3.647063272297929e-06,
        "Contingency": 1.1846578679811445e-07,
        "Expansion": 0.003750367461483608,
        "Temporal": 0.8788222192294572,
        "None": 0.1174236477800001
      },
      "predicted": "Temporal",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:4",
        "doc_id": "20ac419cbf4e",
        "index": 4,
        "text": "The lighthouse was automated in 1972 and the last keeper retired.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "69a2df121d57:4",
        "doc_id": "69a2df121d57",
        "index": 4,
        "text": "Dr. Alden wrote the first guide to the lighthouse optics.",
        "token_count": 10
      },
      "doc_similarity": 0.460477100064572,
      "segment_similarity": 0.14802130919852305,
      "scores": {
        "Comparison": 1.1724851559362657e-05,
        "Contingency": 8.390671187881196e-08,
        "Expansion": 0.0018632177129889885,
        "Temporal": 0.8772515947806985,
        "None": 0.12087337874804129
      },
      "predicted": "Temporal",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:0",
        "doc_id": "20ac419cbf4e",
        "index": 0,
        "text": "Penmarrow Light guards the western harbor wall and its shifting sandbar.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "69a2df121d57:0",
        "doc_id": "69a2df121d57",
        "index": 0,
        "text": "The Stormwick lighthouse was built on the granite headland in 1874.",
        "token_count": 11
      },
      "doc_similarity": 0.460477100064572,
      "segment_similarity": 0.03651867762605057,
      "scores": {
        "Comparison": 1.1058131631925002e-06,
        "Contingency": 7.312317426565645e-07,
        "Expansion": 0.019067897532679314,
        "Temporal": 0.8741790163630689,
        "None": 0.10675124905934603
      },
      "predicted": "Temporal",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:1",
        "doc_id": "20ac419cbf4e",
        "index": 1,
        "text": "The keeper kept a logbook of every ship that entered the harbor at night.",
        "token_count": 14
      },
      "segment_b": {
        "segment_id": "69a2df121d57:0",
        "doc_id": "69a2df121d57",
        "index": 0,
        "text": "The Stormwick lighthouse was built on the granite headland in 1874.",
        "token_count": 11
      },
      "doc_similarity": 0.460477100064572,
      "segment_similarity": 0.0716005494906109,
      "scores": {
        "Comparison": 5.5630921051514986e-05,
        "Contingency": 0.11866667146164459,
        "Expansion": 0.8691937186812128,
        "Temporal": 0.012033835769692958,
        "None": 5.014316639832126e-05
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:4",
        "doc_id": "20ac419cbf4e",
        "index": 4,
        "text": "The lighthouse was automated in 1972 and the last keeper retired.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "69a2df121d57:0",
        "doc_id": "69a2df121d57",
        "index": 0,
        "text": "The Stormwick lighthouse was built on the granite headland in 1874.",
        "token_count": 11
      },
      "doc_similarity": 0.460477100064572,
      "segment_similarity": 0.24888904800417624,
      "scores": {
        "Comparison": 1.0498400839835392e-06,
        "Contingency": 6.242827418658123e-07,
        "Expansion": 0.01722037909792367,
        "Temporal": 0.866620137280606,
        "None": 0.11615780949864433
      },
      "predicted": "Temporal",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:3",
        "doc_id": "20ac419cbf4e",
        "index": 3,
        "text": "Although the lamp was small, its beam reached the outer anchorage because the tower stood on high cliffs.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "69a2df121d57:4",
        "doc_id": "69a2df121d57",
        "index": 4,
        "text": "Dr. Alden wrote the first guide to the lighthouse optics.",
        "token_count": 10
      },
      "doc_similarity": 0.460477100064572,
      "segment_similarity": 0.0869086689972115,
      "scores": {
        "Comparison": 3.3740857592125595e-05,
        "Contingency": 0.8247654353732882,
        "Expansion": 0.17480583676696365,
        "Temporal": 0.0003938762907143915,
        "None": 1.1107114418442971e-06
      },
      "predicted": "Contingency",
      "importance_a": 0.038461538461538464,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "69a2df121d57:0",
        "doc_id": "69a2df121d57",
        "index": 0,
        "text": "The Stormwick lighthouse was built on the granite headland in 1874.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:0",
        "doc_id": "7c1686f37ecf",
        "index": 0,
        "text": "The Gullholm beacon is the oldest lighthouse on the northern coast.",
        "token_count": 11
      },
      "doc_similarity": 0.3323736531991911,
      "segment_similarity": 0.2298832970821322,
      "scores": {
        "Comparison": 3.315734321700253e-06,
        "Contingency": 5.525750835062466e-08,
        "Expansion": 0.0021135875185608107,
        "Temporal": 0.8220450033782128,
        "None": 0.1758380381113964
      },
      "predicted": "Temporal",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:2",
        "doc_id": "5683dfdad044",
        "index": 2,
        "text": "Newspapers called it the quietest strike in history.",
        "token_count": 8
      },
      "segment_b": {
        "segment_id": "69a2df121d57:4",
        "doc_id": "69a2df121d57",
        "index": 4,
        "text": "Dr. Alden wrote the first guide to the lighthouse optics.",
        "token_count": 10
      },
      "doc_similarity": 0.31065047890396247,
      "segment_similarity": 0.0422632254228051,
      "scores": {
        "Comparison": 0.00016243867575913338,
        "Contingency": 9.115233952407945e-10,
        "Expansion": 2.158705731091909e-05,
        "Temporal": 0.8218039669917164,
        "None": 0.17801200636369002
      },
      "predicted": "Temporal",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:2",
        "doc_id": "5683dfdad044",
        "index": 2,
        "text": "Newspapers called it the quietest strike in history.",
        "token_count": 8
      },
      "segment_b": {
        "segment_id": "69a2df121d57:3",
        "doc_id": "69a2df121d57",
        "index": 3,
        "text": "After the lamp was electrified in 1936, the keeper's cottage became a small museum about the harbor and its pilots.",
        "token_count": 20
      },
      "doc_similarity": 0.31065047890396247,
      "segment_similarity": 0.07396561495467542,
      "scores": {
        "Comparison": 1.3249268910881512e-11,
        "Contingency": 0.8007327009032567,
        "Expansion": 0.19926710835725792,
        "Temporal": 1.90726042274527e-07,
        "None": 1.937300418360589e-13
      },
      "predicted": "Contingency",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.15384615384615385
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "69a2df121d57:1",
        "doc_id": "69a2df121d57",
        "index": 1,
        "text": "Its keeper trimmed the oil lamp every night because the harbor entrance was narrow and dangerous.",
        "token_count": 16
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:0",
        "doc_id": "7c1686f37ecf",
        "index": 0,
        "text": "The Gullholm beacon is the oldest lighthouse on the northern coast.",
        "token_count": 11
      },
      "doc_similarity": 0.3323736531991911,
      "segment_similarity": 0.09874977906089162,
      "scores": {
        "Comparison": 3.948359558022205e-05,
        "Contingency": 0.7746301245456146,
        "Expansion": 0.22464716449729408,
        "Temporal": 0.0006812043669147986,
        "None": 2.022994596417837e-06
      },
      "predicted": "Contingency",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:0",
        "doc_id": "20ac419cbf4e",
        "index": 0,
        "text": "Penmarrow Light guards the western harbor wall and its shifting sandbar.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "5683dfdad044:2",
        "doc_id": "5683dfdad044",
        "index": 2,
        "text": "Newspapers called it the quietest strike in history.",
        "token_count": 8
      },
      "doc_similarity": 0.3128683402987789,
      "segment_similarity": 0.01997836614812747,
      "scores": {
        "Comparison": 0.15290440262225666,
        "Contingency": 2.4188023214563003e-06,
        "Expansion": 0.00048126133786472266,
        "Temporal": 0.7716261290563048,
        "None": 0.07498578818125233
      },
      "predicted": "Temporal",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:4",
        "doc_id": "20ac419cbf4e",
        "index": 4,
        "text": "The lighthouse was automated in 1972 and the last keeper retired.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "5683dfdad044:2",
        "doc_id": "5683dfdad044",
        "index": 2,
        "text": "Newspapers called it the quietest strike in history.",
        "token_count": 8
      },
      "doc_similarity": 0.3128683402987789,
      "segment_similarity": 0.08388808136796012,
      "scores": {
        "Comparison": 0.16404042951214212,
        "Contingency": 1.8577252178793537e-06,
        "Expansion": 0.0003765489929541188,
        "Temporal": 0.7463831370358032,
        "None": 0.0891980267338827
      },
      "predicted": "Temporal",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:1",
        "doc_id": "20ac419cbf4e",
        "index": 1,
        "text": "The keeper kept a logbook of every ship that entered the harbor at night.",
        "token_count": 14
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:0",
        "doc_id": "7c1686f37ecf",
        "index": 0,
        "text": "The Gullholm beacon is the oldest lighthouse on the northern coast.",
        "token_count": 11
      },
      "doc_similarity": 0.3421423803957849,
      "segment_similarity": 0.10338646977380872,
      "scores": {
        "Comparison": 3.4102475625262414e-05,
        "Contingency": 0.2555207474748299,
        "Expansion": 0.7409593550656448,
        "Temporal": 0.0034777727654771075,
        "None": 8.022218422940813e-06
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:3",
        "doc_id": "20ac419cbf4e",
        "index": 3,
        "text": "Although the lamp was small, its beam reached the outer anchorage because the tower stood on high cliffs.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:0",
        "doc_id": "7c1686f37ecf",
        "index": 0,
        "text": "The Gullholm beacon is the oldest lighthouse on the northern coast.",
        "token_count": 11
      },
      "doc_similarity": 0.3421423803957849,
      "segment_similarity": 0.16964795381403597,
      "scores": {
        "Comparison": 4.050736377760058e-05,
        "Contingency": 0.7176918197715267,
        "Expansion": 0.28137902151050265,
        "Temporal": 0.0008861344717281031,
        "None": 2.5168824648211395e-06
      },
      "predicted": "Contingency",
      "importance_a": 0.038461538461538464,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:0",
        "doc_id": "20ac419cbf4e",
        "index": 0,
        "text": "Penmarrow Light guards the western harbor wall and its shifting sandbar.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "5683dfdad044:1",
        "doc_id": "5683dfdad044",
        "index": 1,
        "text": "The strike ended after the harbor board doubled the oil allowance and paid for a second keeper at every offshore light.",
        "token_count": 21
      },
      "doc_similarity": 0.3128683402987789,
      "segment_similarity": 0.16616221349084442,
      "scores": {
        "Comparison": 5.694387226228231e-06,
        "Contingency": 0.33046590471757326,
        "Expansion": 0.6688200585891283,
        "Temporal": 0.0007066466186906786,
        "None": 1.695687381499264e-06
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:4",
        "doc_id": "20ac419cbf4e",
        "index": 4,
        "text": "The lighthouse was automated in 1972 and the last keeper retired.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "5683dfdad044:1",
        "doc_id": "5683dfdad044",
        "index": 1,
        "text": "The strike ended after the harbor board doubled the oil allowance and paid for a second keeper at every offshore light.",
        "token_count": 21
      },
      "doc_similarity": 0.3128683402987789,
      "segment_similarity": 0.15299165237749818,
      "scores": {
        "Comparison": 4.527832649688544e-06,
        "Contingency": 0.3342230026722384,
        "Expansion": 0.6651597488642093,
        "Temporal": 0.0006114368511236091,
        "None": 1.2837797789822082e-06
      },
      "predicted": "Expansion",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:4",
        "doc_id": "20ac419cbf4e",
        "index": 4,
        "text": "The lighthouse was automated in 1972 and the last keeper retired.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "69a2df121d57:3",
        "doc_id": "69a2df121d57",
        "index": 3,
        "text": "After the lamp was electrified in 1936, the keeper's cottage became a small museum about the harbor and its pilots.",
        "token_count": 20
      },
      "doc_similarity": 0.460477100064572,
      "segment_similarity": 0.18435182320017007,
      "scores": {
        "Comparison": 5.100904214081848e-06,
        "Contingency": 0.6140272041831792,
        "Expansion": 0.3857190192516319,
        "Temporal": 0.0002480701146508065,
        "None": 6.055463239508258e-07
      },
      "predicted": "Contingency",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.15384615384615385
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:0",
        "doc_id": "20ac419cbf4e",
        "index": 0,
        "text": "Penmarrow Light guards the western harbor wall and its shifting sandbar.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "69a2df121d57:3",
        "doc_id": "69a2df121d57",
        "index": 3,
        "text": "After the lamp was electrified in 1936, the keeper's cottage became a small museum about the harbor and its pilots.",
        "token_count": 20
      },
      "doc_similarity": 0.460477100064572,
      "segment_similarity": 0.14330581248282892,
      "scores": {
        "Comparison": 6.466600444450674e-06,
        "Contingency": 0.6083855693711906,
        "Expansion": 0.39131699431440853,
        "Temporal": 0.00029016106701991917,
        "None": 8.086469364854877e-07
      },
      "predicted": "Contingency",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.15384615384615385
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:1",
        "doc_id": "20ac419cbf4e",
        "index": 1,
        "text": "The keeper kept a logbook of every ship that entered the harbor at night.",
        "token_count": 14
      },
      "segment_b": {
        "segment_id": "69a2df121d57:4",
        "doc_id": "69a2df121d57",
        "index": 4,
        "text": "Dr. Alden wrote the first guide to the lighthouse optics.",
        "token_count": 10
      },
      "doc_similarity": 0.460477100064572,
      "segment_similarity": 0.07178685691458961,
      "scores": {
        "Comparison": 3.7670282111930533e-05,
        "Contingency": 0.39332445629489843,
        "Expansion": 0.6046799863254828,
        "Temporal": 0.0019536008362207656,
        "None": 4.286261286092121e-06
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:0",
        "doc_id": "20ac419cbf4e",
        "index": 0,
        "text": "Penmarrow Light guards the western harbor wall and its shifting sandbar.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "5683dfdad044:0",
        "doc_id": "5683dfdad044",
        "index": 0,
        "text": "In 1901 the lighthouse keepers of the southern harbor district refused to light the lamps for three nights.",
        "token_count": 18
      },
      "doc_similarity": 0.3128683402987789,
      "segment_similarity": 0.1585418998714963,
      "scores": {
        "Comparison": 6.039723546649887e-06,
        "Contingency": 0.40106878353843844,
        "Expansion": 0.598349717647837,
        "Temporal": 0.0005740237920316234,
        "None": 1.4352981463005664e-06
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:4",
        "doc_id": "20ac419cbf4e",
        "index": 4,
        "text": "The lighthouse was automated in 1972 and the last keeper retired.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "5683dfdad044:0",
        "doc_id": "5683dfdad044",
        "index": 0,
        "text": "In 1901 the lighthouse keepers of the southern harbor district refused to light the lamps for three nights.",
        "token_count": 18
      },
      "doc_similarity": 0.3128683402987789,
      "segment_similarity": 0.16957445405332305,
      "scores": {
        "Comparison": 4.794362656514089e-06,
        "Contingency": 0.40555404054744415,
        "Expansion": 0.5939447327673735,
        "Temporal": 0.0004953483021517437,
        "None": 1.0840203739914275e-06
      },
      "predicted": "Expansion",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:3",
        "doc_id": "20ac419cbf4e",
        "index": 3,
        "text": "Although the lamp was small, its beam reached the outer anchorage because the tower stood on high cliffs.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "69a2df121d57:0",
        "doc_id": "69a2df121d57",
        "index": 0,
        "text": "The Stormwick lighthouse was built on the granite headland in 1874.",
        "token_count": 11
      },
      "doc_similarity": 0.460477100064572,
      "segment_similarity": 0.17910406888776523,
      "scores": {
        "Comparison": 7.422563392268235e-05,
        "Contingency": 0.4322681296193221,
        "Expansion": 0.5630965885364886,
        "Temporal": 0.004545435114315643,
        "None": 1.5621095950971918e-05
      },
      "predicted": "Expansion",
      "importance_a": 0.038461538461538464,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "69a2df121d57:4",
        "doc_id": "69a2df121d57",
        "index": 4,
        "text": "Dr. Alden wrote the first guide to the lighthouse optics.",
        "token_count": 10
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:0",
        "doc_id": "7c1686f37ecf",
        "index": 0,
        "text": "The Gullholm beacon is the oldest lighthouse on the northern coast.",
        "token_count": 11
      },
      "doc_similarity": 0.3323736531991911,
      "segment_similarity": 0.17101515189515848,
      "scores": {
        "Comparison": 2.2177525187498716e-06,
        "Contingency": 1.0185990765537106e-09,
        "Expansion": 8.681651700711221e-05,
        "Temporal": 0.4697844881466459,
        "None": 0.5301264765652292
      },
      "predicted": "None",
      "importance_a": 0.38461538461538464,
      "importance_b": 0.38461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:1",
        "doc_id": "5683dfdad044",
        "index": 1,
        "text": "The strike ended after the harbor board doubled the oil allowance and paid for a second keeper at every offshore light.",
        "token_count": 21
      },
      "segment_b": {
        "segment_id": "69a2df121d57:1",
        "doc_id": "69a2df121d57",
        "index": 1,
        "text": "Its keeper trimmed the oil lamp every night because the harbor entrance was narrow and dangerous.",
        "token_count": 16
      },
      "doc_similarity": 0.31065047890396247,
      "segment_similarity": 0.24929887966138015,
      "scores": {
        "Comparison": 0.0705942876436839,
        "Contingency": 0.5169246235214963,
        "Expansion": 0.31868740565689196,
        "Temporal": 0.06908891402016325,
        "None": 0.024704769157764615
      },
      "predicted": "Contingency",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:3",
        "doc_id": "20ac419cbf4e",
        "index": 3,
        "text": "Although the lamp was small, its beam reached the outer anchorage because the tower stood on high cliffs.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "5683dfdad044:1",
        "doc_id": "5683dfdad044",
        "index": 1,
        "text": "The strike ended after the harbor board doubled the oil allowance and paid for a second keeper at every offshore light.",
        "token_count": 21
      },
      "doc_similarity": 0.3128683402987789,
      "segment_similarity": 0.09327880879254695,
      "scores": {
        "Comparison": 0.027204340011690538,
        "Contingency": 0.22686419911481956,
        "Expansion": 0.5152310865197173,
        "Temporal": 0.20800737138901682,
        "None": 0.022693002964755765
      },
      "predicted": "Expansion",
      "importance_a": 0.038461538461538464,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:3",
        "doc_id": "20ac419cbf4e",
        "index": 3,
        "text": "Although the lamp was small, its beam reached the outer anchorage because the tower stood on high cliffs.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "5683dfdad044:0",
        "doc_id": "5683dfdad044",
        "index": 0,
        "text": "In 1901 the lighthouse keepers of the southern harbor district refused to light the lamps for three nights.",
        "token_count": 18
      },
      "doc_similarity": 0.3128683402987789,
      "segment_similarity": 0.09829764730201035,
      "scores": {
        "Comparison": 0.0308345813442015,
        "Contingency": 0.22742394085436213,
        "Expansion": 0.500531395272871,
        "Temporal": 0.2155085756804414,
        "None": 0.025701506848123952
      },
      "predicted": "Expansion",
      "importance_a": 0.038461538461538464,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:0",
        "doc_id": "5683dfdad044",
        "index": 0,
        "text": "In 1901 the lighthouse keepers of the southern harbor district refused to light the lamps for three nights.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "69a2df121d57:1",
        "doc_id": "69a2df121d57",
        "index": 1,
        "text": "Its keeper trimmed the oil lamp every night because the harbor entrance was narrow and dangerous.",
        "token_count": 16
      },
      "doc_similarity": 0.31065047890396247,
      "segment_similarity": 0.11889591033307154,
      "scores": {
        "Comparison": 0.078043670694878,
        "Contingency": 0.492981845327497,
        "Expansion": 0.3228406084423424,
        "Temporal": 0.07731655905656655,
        "None": 0.028817316478716024
      },
      "predicted": "Contingency",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:3",
        "doc_id": "20ac419cbf4e",
        "index": 3,
        "text": "Although the lamp was small, its beam reached the outer anchorage because the tower stood on high cliffs.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "69a2df121d57:3",
        "doc_id": "69a2df121d57",
        "index": 3,
        "text": "After the lamp was electrified in 1936, the keeper's cottage became a small museum about the harbor and its pilots.",
        "token_count": 20
      },
      "doc_similarity": 0.460477100064572,
      "segment_similarity": 0.2646158222137459,
      "scores": {
        "Comparison": 0.04413161726304274,
        "Contingency": 0.23226545681813074,
        "Expansion": 0.45515567176971483,
        "Temporal": 0.23234852891669647,
        "None": 0.03609872523241502
      },
      "predicted": "Expansion",
      "importance_a": 0.038461538461538464,
      "importance_b": 0.15384615384615385
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:1",
        "doc_id": "20ac419cbf4e",
        "index": 1,
        "text": "The keeper kept a logbook of every ship that entered the harbor at night.",
        "token_count": 14
      },
      "segment_b": {
        "segment_id": "5683dfdad044:1",
        "doc_id": "5683dfdad044",
        "index": 1,
        "text": "The strike ended after the harbor board doubled the oil allowance and paid for a second keeper at every offshore light.",
        "token_count": 21
      },
      "doc_similarity": 0.3128683402987789,
      "segment_similarity": 0.23418995213761412,
      "scores": {
        "Comparison": 0.040182720744361355,
        "Contingency": 0.17785983885287887,
        "Expansion": 0.4454060378968322,
        "Temporal": 0.267852048502382,
        "None": 0.06869935400354545
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:1",
        "doc_id": "5683dfdad044",
        "index": 1,
        "text": "The strike ended after the harbor board doubled the oil allowance and paid for a second keeper at every offshore light.",
        "token_count": 21
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:1",
        "doc_id": "7c1686f37ecf",
        "index": 1,
        "text": "Local fishermen funded the first wooden tower because the harbor channel froze each winter and the lamp marked open water.",
        "token_count": 20
      },
      "doc_similarity": 0.2711869977390273,
      "segment_similarity": 0.13048075855660612,
      "scores": {
        "Comparison": 0.08442703721280567,
        "Contingency": 0.4398634160609895,
        "Expansion": 0.3449391332048908,
        "Temporal": 0.09378347608076892,
        "None": 0.03698693744054516
      },
      "predicted": "Contingency",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:1",
        "doc_id": "20ac419cbf4e",
        "index": 1,
        "text": "The keeper kept a logbook of every ship that entered the harbor at night.",
        "token_count": 14
      },
      "segment_b": {
        "segment_id": "5683dfdad044:0",
        "doc_id": "5683dfdad044",
        "index": 0,
        "text": "In 1901 the lighthouse keepers of the southern harbor district refused to light the lamps for three nights.",
        "token_count": 18
      },
      "doc_similarity": 0.3128683402987789,
      "segment_similarity": 0.1792377747028846,
      "scores": {
        "Comparison": 0.04528823957567305,
        "Contingency": 0.1802021260466028,
        "Expansion": 0.42959550383950756,
        "Temporal": 0.2695913715752909,
        "None": 0.07532275896292565
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:0",
        "doc_id": "5683dfdad044",
        "index": 0,
        "text": "In 1901 the lighthouse keepers of the southern harbor district refused to light the lamps for three nights.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:1",
        "doc_id": "7c1686f37ecf",
        "index": 1,
        "text": "Local fishermen funded the first wooden tower because the harbor channel froze each winter and the lamp marked open water.",
        "token_count": 20
      },
      "doc_similarity": 0.2711869977390273,
      "segment_similarity": 0.12518915005189285,
      "scores": {
        "Comparison": 0.09184320040391983,
        "Contingency": 0.4203112689911852,
        "Expansion": 0.3423413676757643,
        "Temporal": 0.10299122653157197,
        "None": 0.042512936397558744
      },
      "predicted": "Contingency",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:1",
        "doc_id": "20ac419cbf4e",
        "index": 1,
        "text": "The keeper kept a logbook of every ship that entered the harbor at night.",
        "token_count": 14
      },
      "segment_b": {
        "segment_id": "69a2df121d57:3",
        "doc_id": "69a2df121d57",
        "index": 3,
        "text": "After the lamp was electrified in 1936, the keeper's cottage became a small museum about the harbor and its pilots.",
        "token_count": 20
      },
      "doc_similarity": 0.460477100064572,
      "segment_similarity": 0.13785402396540453,
      "scores": {
        "Comparison": 0.06558705125873143,
        "Contingency": 0.18883554485407403,
        "Expansion": 0.37998569525160203,
        "Temporal": 0.2679022552367962,
        "None": 0.09768945339879613
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.15384615384615385
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:1",
        "doc_id": "5683dfdad044",
        "index": 1,
        "text": "The strike ended after the harbor board doubled the oil allowance and paid for a second keeper at every offshore light.",
        "token_count": 21
      },
      "segment_b": {
        "segment_id": "69a2df121d57:3",
        "doc_id": "69a2df121d57",
        "index": 3,
        "text": "After the lamp was electrified in 1936, the keeper's cottage became a small museum about the harbor and its pilots.",
        "token_count": 20
      },
      "doc_similarity": 0.31065047890396247,
      "segment_similarity": 0.19082669252074044,
      "scores": {
        "Comparison": 0.0601399877470064,
        "Contingency": 0.1664175004768033,
        "Expansion": 0.37542507919718265,
        "Temporal": 0.26327362693574313,
        "None": 0.13474380564326455
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.15384615384615385
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "69a2df121d57:3",
        "doc_id": "69a2df121d57",
        "index": 3,
        "text": "After the lamp was electrified in 1936, the keeper's cottage became a small museum about the harbor and its pilots.",
        "token_count": 20
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:1",
        "doc_id": "7c1686f37ecf",
        "index": 1,
        "text": "Local fishermen funded the first wooden tower because the harbor channel froze each winter and the lamp marked open water.",
        "token_count": 20
      },
      "doc_similarity": 0.3323736531991911,
      "segment_similarity": 0.17539129220783822,
      "scores": {
        "Comparison": 0.11438187296560945,
        "Contingency": 0.3679280150341906,
        "Expansion": 0.3257168503548305,
        "Temporal": 0.129807603601916,
        "None": 0.06216565804345356
      },
      "predicted": "Contingency",
      "importance_a": 0.15384615384615385,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:0",
        "doc_id": "5683dfdad044",
        "index": 0,
        "text": "In 1901 the lighthouse keepers of the southern harbor district refused to light the lamps for three nights.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "69a2df121d57:3",
        "doc_id": "69a2df121d57",
        "index": 3,
        "text": "After the lamp was electrified in 1936, the keeper's cottage became a small museum about the harbor and its pilots.",
        "token_count": 20
      },
      "doc_similarity": 0.31065047890396247,
      "segment_similarity": 0.15031906788816396,
      "scores": {
        "Comparison": 0.06258298685087002,
        "Contingency": 0.16183923120880528,
        "Expansion": 0.3646847902849573,
        "Temporal": 0.26771827044842406,
        "None": 0.14317472120694327
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.15384615384615385
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:1",
        "doc_id": "5683dfdad044",
        "index": 1,
        "text": "The strike ended after the harbor board doubled the oil allowance and paid for a second keeper at every offshore light.",
        "token_count": 21
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:2",
        "doc_id": "7c1686f37ecf",
        "index": 2,
        "text": "When the stone tower replaced it, the keeper planted a garden below the cliffs.",
        "token_count": 14
      },
      "doc_similarity": 0.2711869977390273,
      "segment_similarity": 0.16345109476958805,
      "scores": {
        "Comparison": 0.10745785243460682,
        "Contingency": 0.33073691504359864,
        "Expansion": 0.3389893395764771,
        "Temporal": 0.14987885381591656,
        "None": 0.07293703912940078
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.038461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "69a2df121d57:1",
        "doc_id": "69a2df121d57",
        "index": 1,
        "text": "Its keeper trimmed the oil lamp every night because the harbor entrance was narrow and dangerous.",
        "token_count": 16
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:2",
        "doc_id": "7c1686f37ecf",
        "index": 2,
        "text": "When the stone tower replaced it, the keeper planted a garden below the cliffs.",
        "token_count": 14
      },
      "doc_similarity": 0.3323736531991911,
      "segment_similarity": 0.1388359265504321,
      "scores": {
        "Comparison": 0.09886054243466529,
        "Contingency": 0.2331476003969389,
        "Expansion": 0.33818838000136076,
        "Temporal": 0.24964489546546925,
        "None": 0.08015858170156585
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.038461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "5683dfdad044:0",
        "doc_id": "5683dfdad044",
        "index": 0,
        "text": "In 1901 the lighthouse keepers of the southern harbor district refused to light the lamps for three nights.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:2",
        "doc_id": "7c1686f37ecf",
        "index": 2,
        "text": "When the stone tower replaced it, the keeper planted a garden below the cliffs.",
        "token_count": 14
      },
      "doc_similarity": 0.2711869977390273,
      "segment_similarity": 0.11570211349937212,
      "scores": {
        "Comparison": 0.1140561448306902,
        "Contingency": 0.31428337546441015,
        "Expansion": 0.33055836003690997,
        "Temporal": 0.15997978758501513,
        "None": 0.08112233208297437
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.038461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:3",
        "doc_id": "20ac419cbf4e",
        "index": 3,
        "text": "Although the lamp was small, its beam reached the outer anchorage because the tower stood on high cliffs.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:2",
        "doc_id": "7c1686f37ecf",
        "index": 2,
        "text": "When the stone tower replaced it, the keeper planted a garden below the cliffs.",
        "token_count": 14
      },
      "doc_similarity": 0.3421423803957849,
      "segment_similarity": 0.24963296284205838,
      "scores": {
        "Comparison": 0.11014938673414926,
        "Contingency": 0.22793778013804455,
        "Expansion": 0.31960237245897705,
        "Temporal": 0.24726919180531398,
        "None": 0.09504126886351512
      },
      "predicted": "Expansion",
      "importance_a": 0.038461538461538464,
      "importance_b": 0.038461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "69a2df121d57:3",
        "doc_id": "69a2df121d57",
        "index": 3,
        "text": "After the lamp was electrified in 1936, the keeper's cottage became a small museum about the harbor and its pilots.",
        "token_count": 20
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:2",
        "doc_id": "7c1686f37ecf",
        "index": 2,
        "text": "When the stone tower replaced it, the keeper planted a garden below the cliffs.",
        "token_count": 14
      },
      "doc_similarity": 0.3323736531991911,
      "segment_similarity": 0.12846074098092145,
      "scores": {
        "Comparison": 0.1327874347666019,
        "Contingency": 0.27196917119178426,
        "Expansion": 0.301884160159643,
        "Temporal": 0.18557446891372667,
        "None": 0.10778476496824424
      },
      "predicted": "Expansion",
      "importance_a": 0.15384615384615385,
      "importance_b": 0.038461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:1",
        "doc_id": "20ac419cbf4e",
        "index": 1,
        "text": "The keeper kept a logbook of every ship that entered the harbor at night.",
        "token_count": 14
      },
      "segment_b": {
        "segment_id": "69a2df121d57:1",
        "doc_id": "69a2df121d57",
        "index": 1,
        "text": "Its keeper trimmed the oil lamp every night because the harbor entrance was narrow and dangerous.",
        "token_count": 16
      },
      "doc_similarity": 0.460477100064572,
      "segment_similarity": 0.27208121713204975,
      "scores": {
        "Comparison": 0.17279494300540033,
        "Contingency": 0.2509833269089488,
        "Expansion": 0.2588238060366623,
        "Temporal": 0.19198656097046762,
        "None": 0.12541136307852097
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:1",
        "doc_id": "20ac419cbf4e",
        "index": 1,
        "text": "The keeper kept a logbook of every ship that entered the harbor at night.",
        "token_count": 14
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:1",
        "doc_id": "7c1686f37ecf",
        "index": 1,
        "text": "Local fishermen funded the first wooden tower because the harbor channel froze each winter and the lamp marked open water.",
        "token_count": 20
      },
      "doc_similarity": 0.3421423803957849,
      "segment_similarity": 0.11603475126196022,
      "scores": {
        "Comparison": 0.17368996890916696,
        "Contingency": 0.2258095782239766,
        "Expansion": 0.24704206295156508,
        "Temporal": 0.20342009127760108,
        "None": 0.1500382986376903
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:1",
        "doc_id": "20ac419cbf4e",
        "index": 1,
        "text": "The keeper kept a logbook of every ship that entered the harbor at night.",
        "token_count": 14
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:2",
        "doc_id": "7c1686f37ecf",
        "index": 2,
        "text": "When the stone tower replaced it, the keeper planted a garden below the cliffs.",
        "token_count": 14
      },
      "doc_similarity": 0.3421423803957849,
      "segment_similarity": 0.1643124000749315,
      "scores": {
        "Comparison": 0.16035116121347048,
        "Contingency": 0.2040434407897567,
        "Expansion": 0.24418739325125716,
        "Temporal": 0.21615684841399033,
        "None": 0.17526115633152536
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.038461538461538464
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "69a2df121d57:1",
        "doc_id": "69a2df121d57",
        "index": 1,
        "text": "Its keeper trimmed the oil lamp every night because the harbor entrance was narrow and dangerous.",
        "token_count": 16
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:1",
        "doc_id": "7c1686f37ecf",
        "index": 1,
        "text": "Local fishermen funded the first wooden tower because the harbor channel froze each winter and the lamp marked open water.",
        "token_count": 20
      },
      "doc_similarity": 0.3323736531991911,
      "segment_similarity": 0.20512280759487803,
      "scores": {
        "Comparison": 0.16893822331675806,
        "Contingency": 0.20382138897020596,
        "Expansion": 0.24232181664837765,
        "Temporal": 0.2177889592707184,
        "None": 0.16712961179393995
      },
      "predicted": "Expansion",
      "importance_a": 0.8076923076923077,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:3",
        "doc_id": "20ac419cbf4e",
        "index": 3,
        "text": "Although the lamp was small, its beam reached the outer anchorage because the tower stood on high cliffs.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "7c1686f37ecf:1",
        "doc_id": "7c1686f37ecf",
        "index": 1,
        "text": "Local fishermen funded the first wooden tower because the harbor channel froze each winter and the lamp marked open water.",
        "token_count": 20
      },
      "doc_similarity": 0.3421423803957849,
      "segment_similarity": 0.21291620846938752,
      "scores": {
        "Comparison": 0.173488349544857,
        "Contingency": 0.20021061211604022,
        "Expansion": 0.2331690391129513,
        "Temporal": 0.2130136205080481,
        "None": 0.18011837871810332
      },
      "predicted": "Expansion",
      "importance_a": 0.038461538461538464,
      "importance_b": 0.8076923076923077
    },
    {
      "topic": "harbor lighthouses",
      "segment_a": {
        "segment_id": "20ac419cbf4e:3",
        "doc_id": "20ac419cbf4e",
        "index": 3,
        "text": "Although the lamp was small, its beam reached the outer anchorage because the tower stood on high cliffs.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "69a2df121d57:1",
        "doc_id": "69a2df121d57",
        "index": 1,
        "text": "Its keeper trimmed the oil lamp every night because the harbor entrance was narrow and dangerous.",
        "token_count": 16
      },
      "doc_similarity": 0.460477100064572,
      "segment_similarity": 0.24393289496110457,
      "scores": {
        "Comparison": 0.1851040899265753,
        "Contingency": 0.19572251221424036,
        "Expansion": 0.22133097733569176,
        "Temporal": 0.20630061179572243,
        "None": 0.19154180872777013
      },
      "predicted": "Expansion",
      "importance_a": 0.038461538461538464,
      "importance_b": 0.8076923076923077
    }
  ],
  "mountain railways": [
    {
      "topic": "mountain railways",
      "segment_a": {
        "segment_id": "3d3891bbba41:3",
        "doc_id": "3d3891bbba41",
        "index": 3,
        "text": "It still carries milk down from the alp every morning.",
        "token_count": 10
      },
      "segment_b": {
        "segment_id": "ec1aaa9fb896:2",
        "doc_id": "ec1aaa9fb896",
        "index": 2,
        "text": "Because the gradient exceeds one in four, every carriage carries its own brake wheel.",
        "token_count": 14
      },
      "doc_similarity": 0.32939593662919264,
      "segment_similarity": 0.10962274016732065,
      "scores": {
        "Comparison": 8.28959553354074e-09,
        "Contingency": 0.9987256698930808,
        "Expansion": 0.0012743055825323384,
        "Temporal": 1.621417919632095e-08,
        "None": 2.0612095921869507e-11
      },
      "predicted": "Contingency",
      "importance_a": 0.5,
      "importance_b": 0.07142857142857142
    },
    {
      "topic": "mountain railways",
      "segment_a": {
        "segment_id": "3d3891bbba41:0",
        "doc_id": "3d3891bbba41",
        "index": 0,
        "text": "The Brantholm funicular is the steepest mountain railway in the region.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "ec1aaa9fb896:2",
        "doc_id": "ec1aaa9fb896",
        "index": 2,
        "text": "Because the gradient exceeds one in four, every carriage carries its own brake wheel.",
        "token_count": 14
      },
      "doc_similarity": 0.32939593662919264,
      "segment_similarity": 0.07837458661964385,
      "scores": {
        "Comparison": 3.174393203115932e-07,
        "Contingency": 0.9960382256017972,
        "Expansion": 0.003961070935279073,
        "Temporal": 3.8414162551439894e-07,
        "None": 1.881977821685497e-09
      },
      "predicted": "Contingency",
      "importance_a": 0.9285714285714286,
      "importance_b": 0.07142857142857142
    },
    {
      "topic": "mountain railways",
      "segment_a": {
        "segment_id": "3d3891bbba41:3",
        "doc_id": "3d3891bbba41",
        "index": 3,
        "text": "It still carries milk down from the alp every morning.",
        "token_count": 10
      },
      "segment_b": {
        "segment_id": "ec1aaa9fb896:0",
        "doc_id": "ec1aaa9fb896",
        "index": 0,
        "text": "The Kestrel Pass railway climbs from the valley station to the summit in forty minutes.",
        "token_count": 15
      },
      "doc_similarity": 0.32939593662919264,
      "segment_similarity": 0.11309757614522277,
      "scores": {
        "Comparison": 2.8879667609813338e-08,
        "Contingency": 0.9099371185020912,
        "Expansion": 0.09006044406086965,
        "Temporal": 2.4080413051274042e-06,
        "None": 5.16066583168584e-10
      },
      "predicted": "Contingency",
      "importance_a": 0.5,
      "importance_b": 0.5
    },
    {
      "topic": "mountain railways",
      "segment_a": {
        "segment_id": "3d3891bbba41:1",
        "doc_id": "3d3891bbba41",
        "index": 1,
        "text": "Two counterbalanced carriages share a single track with a passing loop at the middle station.",
        "token_count": 15
      },
      "segment_b": {
        "segment_id": "ec1aaa9fb896:3",
        "doc_id": "ec1aaa9fb896",
        "index": 3,
        "text": "Snow closes the line each November.",
        "token_count": 6
      },
      "doc_similarity": 0.32939593662919264,
      "segment_similarity": 0.018608527098098765,
      "scores": {
        "Comparison": 0.00010055711586969801,
        "Contingency": 0.9098793825952329,
        "Expansion": 0.08978263372014719,
        "Temporal": 0.0002364860214382903,
        "None": 9.405473118752973e-07
      },
      "predicted": "Contingency",
      "importance_a": 0.5,
      "importance_b": 0.5
    },
    {
      "topic": "mountain railways",
      "segment_a": {
        "segment_id": "3d3891bbba41:2",
        "doc_id": "3d3891bbba41",
        "index": 2,
        "text": "When the lower reservoir was drained in 1967, the railway switched from water ballast to an electric winch.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "ec1aaa9fb896:1",
        "doc_id": "ec1aaa9fb896",
        "index": 1,
        "text": "The rack railway was cut into the mountain between 1896 and 1899.",
        "token_count": 12
      },
      "doc_similarity": 0.32939593662919264,
      "segment_similarity": 0.14810733128462344,
      "scores": {
        "Comparison": 0.00017208273038507756,
        "Contingency": 0.037250126456329816,
        "Expansion": 0.8753170732694038,
        "Temporal": 0.08578346015757511,
        "None": 0.0014772573863062073
      },
      "predicted": "Expansion",
      "importance_a": 0.07142857142857142,
      "importance_b": 0.9285714285714286
    },
    {
      "topic": "mountain railways",
      "segment_a": {
        "segment_id": "3d3891bbba41:1",
        "doc_id": "3d3891bbba41",
        "index": 1,
        "text": "Two counterbalanced carriages share a single track with a passing loop at the middle station.",
        "token_count": 15
      },
      "segment_b": {
        "segment_id": "ec1aaa9fb896:1",
        "doc_id": "ec1aaa9fb896",
        "index": 1,
        "text": "The rack railway was cut into the mountain between 1896 and 1899.",
        "token_count": 12
      },
      "doc_similarity": 0.32939593662919264,
      "segment_similarity": 0.027769431478170643,
      "scores": {
        "Comparison": 0.00023777056546021597,
        "Contingency": 0.09380710045593822,
        "Expansion": 0.8632186463745556,
        "Temporal": 0.042286428752950966,
        "None": 0.00045005385109498524
      },
      "predicted": "Expansion",
      "importance_a": 0.5,
      "importance_b": 0.9285714285714286
    },
    {
      "topic": "mountain railways",
      "segment_a": {
        "segment_id": "3d3891bbba41:0",
        "doc_id": "3d3891bbba41",
        "index": 0,
        "text": "The Brantholm funicular is the steepest mountain railway in the region.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "ec1aaa9fb896:0",
        "doc_id": "ec1aaa9fb896",
        "index": 0,
        "text": "The Kestrel Pass railway climbs from the valley station to the summit in forty minutes.",
        "token_count": 15
      },
      "doc_similarity": 0.32939593662919264,
      "segment_similarity": 0.2323087820840472,
      "scores": {
        "Comparison": 1.512421148665838e-06,
        "Contingency": 0.845302520307174,
        "Expansion": 0.15465793474847894,
        "Temporal": 3.797121258161825e-05,
        "None": 6.131061695568e-08
      },
      "predicted": "Contingency",
      "importance_a": 0.9285714285714286,
      "importance_b": 0.5
    },
    {
      "topic": "mountain railways",
      "segment_a": {
        "segment_id": "3d3891bbba41:3",
        "doc_id": "3d3891bbba41",
        "index": 3,
        "text": "It still carries milk down from the alp every morning.",
        "token_count": 10
      },
      "segment_b": {
        "segment_id": "ec1aaa9fb896:1",
        "doc_id": "ec1aaa9fb896",
        "index": 1,
        "text": "The rack railway was cut into the mountain between 1896 and 1899.",
        "token_count": 12
      },
      "doc_similarity": 0.32939593662919264,
      "segment_similarity": 0.03561938986691107,
      "scores": {
        "Comparison": 6.271395996831043e-08,
        "Contingency": 2.7300056763379343e-05,
        "Expansion": 0.7285338075144759,
        "Temporal": 0.2712825524427128,
        "None": 0.00015627727208797736
      },
      "predicted": "Expansion",
      "importance_a": 0.5,
      "importance_b": 0.9285714285714286
    },
    {
      "topic": "mountain railways",
      "segment_a": {
        "segment_id": "3d3891bbba41:2",
        "doc_id": "3d3891bbba41",
        "index": 2,
        "text": "When the lower reservoir was drained in 1967, the railway switched from water ballast to an electric winch.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "ec1aaa9fb896:3",
        "doc_id": "ec1aaa9fb896",
        "index": 3,
        "text": "Snow closes the line each November.",
        "token_count": 6
      },
      "doc_similarity": 0.32939593662919264,
      "segment_similarity": 0.03530348207720675,
      "scores": {
        "Comparison": 0.0003825888907010067,
        "Contingency": 0.7062503976434978,
        "Expansion": 0.2919514014007403,
        "Temporal": 0.0014124831688775766,
        "None": 3.1288961834446356e-06
      },
      "predicted": "Contingency",
      "importance_a": 0.07142857142857142,
      "importance_b": 0.5
    },
    {
      "topic": "mountain railways",
      "segment_a": {
        "segment_id": "3d3891bbba41:3",
        "doc_id": "3d3891bbba41",
        "index": 3,
        "text": "It still carries milk down from the alp every morning.",
        "token_count": 10
      },
      "segment_b": {
        "segment_id": "ec1aaa9fb896:3",
        "doc_id": "ec1aaa9fb896",
        "index": 3,
        "text": "Snow closes the line each November.",
        "token_count": 6
      },
      "doc_similarity": 0.32939593662919264,
      "segment_similarity": 0.023868849532522874,
      "scores": {
        "Comparison": 0.33858263260741556,
        "Contingency": 4.679978946721257e-09,
        "Expansion": 5.54894529289478e-07,
        "Temporal": 0.05692922552323262,
        "None": 0.6044875822948436
      },
      "predicted": "None",
      "importance_a": 0.5,
      "importance_b": 0.5
    },
    {
      "topic": "mountain railways",
      "segment_a": {
        "segment_id": "3d3891bbba41:0",
        "doc_id": "3d3891bbba41",
        "index": 0,
        "text": "The Brantholm funicular is the steepest mountain railway in the region.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "ec1aaa9fb896:1",
        "doc_id": "ec1aaa9fb896",
        "index": 1,
        "text": "The rack railway was cut into the mountain between 1896 and 1899.",
        "token_count": 12
      },
      "doc_similarity": 0.32939593662919264,
      "segment_similarity": 0.26733843321534256,
      "scores": {
        "Comparison": 5.473555767316709e-07,
        "Contingency": 4.4788456190902544e-05,
        "Expansion": 0.4640867876894514,
        "Temporal": 0.5330794084888323,
        "None": 0.00278846800994869
      },
      "predicted": "Temporal",
      "importance_a": 0.9285714285714286,
      "importance_b": 0.9285714285714286
    },
    {
      "topic": "mountain railways",
      "segment_a": {
        "segment_id": "3d3891bbba41:0",
        "doc_id": "3d3891bbba41",
        "index": 0,
        "text": "The Brantholm funicular is the steepest mountain railway in the region.",
        "token_count": 11
      },
      "segment_b": {
        "segment_id": "ec1aaa9fb896:3",
        "doc_id": "ec1aaa9fb896",
        "index": 3,
        "text": "Snow closes the line each November.",
        "token_count": 6
      },
      "doc_similarity": 0.32939593662919264,
      "segment_similarity": 0.07010091921652871,
      "scores": {
        "Comparison": 0.34383344140992333,
        "Contingency": 6.558469003874504e-07,
        "Expansion": 9.81789006825867e-05,
        "Temporal": 0.5016463493946288,
        "None": 0.15442137444786488
      },
      "predicted": "Temporal",
      "importance_a": 0.9285714285714286,
      "importance_b": 0.5
    },
    {
      "topic": "mountain railways",
      "segment_a": {
        "segment_id": "3d3891bbba41:2",
        "doc_id": "3d3891bbba41",
        "index": 2,
        "text": "When the lower reservoir was drained in 1967, the railway switched from water ballast to an electric winch.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "ec1aaa9fb896:2",
        "doc_id": "ec1aaa9fb896",
        "index": 2,
        "text": "Because the gradient exceeds one in four, every carriage carries its own brake wheel.",
        "token_count": 14
      },
      "doc_similarity": 0.32939593662919264,
      "segment_similarity": 0.0467102772947228,
      "scores": {
        "Comparison": 0.09380622351704522,
        "Contingency": 0.4626905692129693,
        "Expansion": 0.31696836161172814,
        "Temporal": 0.09018468334845425,
        "None": 0.036350162309803084
      },
      "predicted": "Contingency",
      "importance_a": 0.07142857142857142,
      "importance_b": 0.07142857142857142
    },
    {
      "topic": "mountain railways",
      "segment_a": {
        "segment_id": "3d3891bbba41:1",
        "doc_id": "3d3891bbba41",
        "index": 1,
        "text": "Two counterbalanced carriages share a single track with a passing loop at the middle station.",
        "token_count": 15
      },
      "segment_b": {
        "segment_id": "ec1aaa9fb896:0",
        "doc_id": "ec1aaa9fb896",
        "index": 0,
        "text": "The Kestrel Pass railway climbs from the valley station to the summit in forty minutes.",
        "token_count": 15
      },
      "doc_similarity": 0.32939593662919264,
      "segment_similarity": 0.10369068215049725,
      "scores": {
        "Comparison": 0.09734128314638033,
        "Contingency": 0.19955417811473591,
        "Expansion": 0.3255985969865597,
        "Temporal": 0.2541324140193274,
        "None": 0.12337352773299662
      },
      "predicted": "Expansion",
      "importance_a": 0.5,
      "importance_b": 0.5
    },
    {
      "topic": "mountain railways",
      "segment_a": {
        "segment_id": "3d3891bbba41:2",
        "doc_id": "3d3891bbba41",
        "index": 2,
        "text": "When the lower reservoir was drained in 1967, the railway switched from water ballast to an electric winch.",
        "token_count": 18
      },
      "segment_b": {
        "segment_id": "ec1aaa9fb896:0",
        "doc_id": "ec1aaa9fb896",
        "index": 0,
        "text": "The Kestrel Pass railway climbs from the valley station to the summit in forty minutes.",
        "token_count": 15
      },
      "doc_similarity": 0.32939593662919264,
      "segment_similarity": 0.21853074659790522,
      "scores": {
        "Comparison": 0.09668683413086394,
        "Contingency": 0.1936361710720648,
        "Expansion": 0.32196116886212023,
        "Temporal": 0.2410268341243784,
        "None": 0.14668899181057257
      },
      "predicted": "Expansion",
      "importance_a": 0.07142857142857142,
      "importance_b": 0.5
    },
    {
      "topic": "mountain railways",
      "segment_a": {
        "segment_id": "3d3891bbba41:1",
        "doc_id": "3d3891bbba41",
        "index": 1,
        "text": "Two counterbalanced carriages share a single track with a passing loop at the middle station.",
        "token_count": 15
      },
      "segment_b": {
        "segment_id": "ec1aaa9fb896:2",
        "doc_id": "ec1aaa9fb896",
        "index": 2,
        "text": "Because the gradient exceeds one in four, every carriage carries its own brake wheel.",
        "token_count": 14
      },
      "doc_similarity": 0.32939593662919264,
      "segment_similarity": 0.013172263050499924,
      "scores": {
        "Comparison": 0.17326846522804012,
        "Contingency": 0.2592405809883757,
        "Expansion": 0.2619097388967321,
        "Temporal": 0.18769484036730477,
        "None": 0.11788637451954728
      },
      "predicted": "Expansion",
      "importance_a": 0.5,
      "importance_b": 0.07142857142857142
    }
  ],
  "river ferries": [],
  "urban beekeeping": [
    {
      "topic": "urban beekeeping",
      "segment_a": {
        "segment_id": "5d810a426530:2",
        "doc_id": "5d810a426530",
        "index": 2,
        "text": "Inspectors visit every registered apiary once a year.",
        "token_count": 8
      },
      "segment_b": {
        "segment_id": "625ca824ec44:2",
        "doc_id": "625ca824ec44",
        "index": 2,
        "text": "While a rural hive may starve in late summer, urban bees find flowers in every season.",
        "token_count": 16
      },
      "doc_similarity": 0.20131685774813415,
      "segment_similarity": 0.040523210184604835,
      "scores": {
        "Comparison": 9.880979454314056e-11,
        "Contingency": 0.0006332496593889454,
        "Expansion": 0.9991916482296895,
        "Temporal": 0.0001751015690881991,
        "None": 4.4302348159536084e-10
      },
      "predicted": "Expansion",
      "importance_a": 0.375,
      "importance_b": 0.0
    },
    {
      "topic": "urban beekeeping",
      "segment_a": {
        "segment_id": "625ca824ec44:0",
        "doc_id": "625ca824ec44",
        "index": 0,
        "text": "Rooftop beekeeping spread through the city after 2010.",
        "token_count": 8
      },
      "segment_b": {
        "segment_id": "e9f1936c5557:0",
        "doc_id": "e9f1936c5557",
        "index": 0,
        "text": "A volunteer survey weighed urban hives every week for two years.",
        "token_count": 11
      },
      "doc_similarity": 0.2638683514781247,
      "segment_similarity": 0.0,
      "scores": {
        "Comparison": 3.032548972670125e-11,
        "Contingency": 5.363754719009873e-05,
        "Expansion": 0.9989121895113838,
        "Temporal": 0.0010341727386457451,
        "None": 1.7245501502431887e-10
      },
      "predicted": "Expansion",
      "importance_a": 0.875,
      "importance_b": 0.875
    },
    {
      "topic": "urban beekeeping",
      "segment_a": {
        "segment_id": "5d810a426530:0",
        "doc_id": "5d810a426530",
        "index": 0,
        "text": "The city council passed a beekeeping ordinance in 2014.",
        "token_count": 9
      },
      "segment_b": {
        "segment_id": "625ca824ec44:2",
        "doc_id": "625ca824ec44",
        "index": 2,
        "text": "While a rural hive may starve in late summer, urban bees find flowers in every season.",
        "token_count": 16
      },
      "doc_similarity": 0.20131685774813415,
      "segment_similarity": 0.07504362170301106,
      "scores": {
        "Comparison": 4.023034542507656e-09,
        "Contingency": 0.0010540198929634285,
        "Expansion": 0.9977180078143769,
        "Temporal": 0.001227898665495967,
        "None": 6.960412936954595e-08
      },
      "predicted": "Expansion",
      "importance_a": 0.875,
      "importance_b": 0.0
    },
    {
      "topic": "urban beekeeping",
      "segment_a": {
        "segment_id": "625ca824ec44:0",
        "doc_id": "625ca824ec44",
        "index": 0,
        "text": "Rooftop beekeeping spread through the city after 2010.",
        "token_count": 8
      },
      "segment_b": {
        "segment_id": "e9f1936c5557:2",
        "doc_id": "e9f1936c5557",
        "index": 2,
        "text": "The survey concluded that forage, not traffic, decides how much honey a city hive can make.",
        "token_count": 16
      },
      "doc_similarity": 0.2638683514781247,
      "segment_similarity": 0.08225441867881428,
      "scores": {
        "Comparison": 6.297076293796235e-12,
        "Contingency": 0.9750694956201166,
        "Expansion": 0.02493049115144276,
        "Temporal": 1.3222122755562241e-08,
        "None": 2.0772835608457794e-14
      },
      "predicted": "Contingency",
      "importance_a": 0.875,
      "importance_b": 0.375
    },
    {
      "topic": "urban beekeeping",
      "segment_a": {
        "segment_id": "5d810a426530:1",
        "doc_id": "5d810a426530",
        "index": 1,
        "text": "Each rooftop apiary must register its hives and keep a water source, because bees otherwise crowd the neighbours' balconies.",
        "token_count": 19
      },
      "segment_b": {
        "segment_id": "625ca824ec44:0",
        "doc_id": "625ca824ec44",
        "index": 0,
        "text": "Rooftop beekeeping spread through the city after 2010.",
        "token_count": 8
      },
      "doc_similarity": 0.20131685774813415,
      "segment_similarity": 0.08085408157878111,
      "scores": {
        "Comparison": 8.182113506218729e-05,
        "Contingency": 0.9724048842468006,
        "Expansion": 0.027434230240980014,
        "Temporal": 7.809743398104593e-05,
        "None": 9.669431764717138e-07
      },
      "predicted": "Contingency",
      "importance_a": 0.375,
      "importance_b": 0.875
    },
    {
      "topic": "urban beekeeping",
      "segment_a": {
        "segment_id": "625ca824ec44:0",
        "doc_id": "625ca824ec44",
        "index": 0,
        "text": "Rooftop beekeeping spread through the city after 2010.",
        "token_count": 8
      },
      "segment_b": {
        "segment_id": "e9f1936c5557:1",
        "doc_id": "e9f1936c5557",
        "index": 1,
        "text": "Hives near the botanical garden gained the most weight, and rooftop hives above the market district produced the darkest honey.",
        "token_count": 20
      },
      "doc_similarity": 0.2638683514781247,
      "segment_similarity": 0.11602325699253274,
      "scores": {
        "Comparison": 6.815357587988383e-12,
        "Contingency": 0.038487274491157755,
        "Expansion": 0.9615076991911434,
        "Temporal": 5.026310070097057e-06,
        "None": 8.134630128559999e-13
      },
      "predicted": "Expansion",
      "importance_a": 0.875,
      "importance_b": 0.375
    },
    {
      "topic": "urban beekeeping",
      "segment_a": {
        "segment_id": "625ca824ec44:1",
        "doc_id": "625ca824ec44",
        "index": 1,
        "text": "Bees from rooftop hives forage in parks and along railway embankments, and the honey often tastes of linden blossom.",
        "token_count": 19
      },
      "segment_b": {
        "segment_id": "e9f1936c5557:0",
        "doc_id": "e9f1936c5557",
        "index": 0,
        "text": "A volunteer survey weighed urban hives every week for two years.",
        "token_count": 11
      },
      "doc_similarity": 0.2638683514781247,
      "segment_similarity": 0.05461371077843489,
      "scores": {
        "Comparison": 0.00033793164869714003,
        "Contingency": 0.0404875293233039,
        "Expansion": 0.8361706786884064,
        "Temporal": 0.1197548976176041,
        "None": 0.003248962721988586
      },
      "predicted": "Expansion",
      "importance_a": 0.375,
      "importance_b": 0.875
    },
    {
      "topic": "urban beekeeping",
      "segment_a": {
        "segment_id": "5d810a426530:2",
        "doc_id": "5d810a426530",
        "index": 2,
        "text": "Inspectors visit every registered apiary once a year.",
        "token_count": 8
      },
      "segment_b": {
        "segment_id": "625ca824ec44:1",
        "doc_id": "625ca824ec44",
        "index": 1,
        "text": "Bees from rooftop hives forage in parks and along railway embankments, and the honey often tastes of linden blossom.",
        "token_count": 19
      },
      "doc_similarity": 0.20131685774813415,
      "segment_similarity": 0.0,
      "scores": {
        "Comparison": 1.6165210692051269e-10,
        "Contingency": 0.8162633372877904,
        "Expansion": 0.18373620529466803,
        "Temporal": 4.572523852793279e-07,
        "None": 3.5042617507868205e-12
      },
      "predicted": "Contingency",
      "importance_a": 0.375,
      "importance_b": 0.375
    },
    {
      "topic": "urban beekeeping",
      "segment_a": {
        "segment_id": "5d810a426530:0",
        "doc_id": "5d810a426530",
        "index": 0,
        "text": "The city council passed a beekeeping ordinance in 2014.",
        "token_count": 9
      },
      "segment_b": {
        "segment_id": "625ca824ec44:1",
        "doc_id": "625ca824ec44",
        "index": 1,
        "text": "Bees from rooftop hives forage in parks and along railway embankments, and the honey often tastes of linden blossom.",
        "token_count": 19
      },
      "doc_similarity": 0.20131685774813415,
      "segment_similarity": 0.04311434282824169,
      "scores": {
        "Comparison": 9.763809928021926e-09,
        "Contingency": 0.7481379233725819,
        "Expansion": 0.25185732768735813,
        "Temporal": 4.73879701886443e-06,
        "None": 3.792312672011373e-10
      },
      "predicted": "Contingency",
      "importance_a": 0.875,
      "importance_b": 0.375
    },
    {
      "topic": "urban beekeeping",
      "segment_a": {
        "segment_id": "625ca824ec44:2",
        "doc_id": "625ca824ec44",
        "index": 2,
        "text": "While a rural hive may starve in late summer, urban bees find flowers in every season.",
        "token_count": 16
      },
      "segment_b": {
        "segment_id": "e9f1936c5557:1",
        "doc_id": "e9f1936c5557",
        "index": 1,
        "text": "Hives near the botanical garden gained the most weight, and rooftop hives above the market district produced the darkest honey.",
        "token_count": 20
      },
      "doc_similarity": 0.2638683514781247,
      "segment_similarity": 0.0,
      "scores": {
        "Comparison": 0.001529162624135155,
        "Contingency": 0.057822257374073496,
        "Expansion": 0.7409674889610769,
        "Temporal": 0.1768631274819876,
        "None": 0.02281796355872681
      },
      "predicted": "Expansion",
      "importance_a": 0.0,
      "importance_b": 0.375
    },
    {
      "topic": "urban beekeeping",
      "segment_a": {
        "segment_id": "5d810a426530:1",
        "doc_id": "5d810a426530",
        "index": 1,
        "text": "Each rooftop apiary must register its hives and keep a water source, because bees otherwise crowd the neighbours' balconies.",
        "token_count": 19
      },
      "segment_b": {
        "segment_id": "625ca824ec44:2",
        "doc_id": "625ca824ec44",
        "index": 2,
        "text": "While a rural hive may starve in late summer, urban bees find flowers in every season.",
        "token_count": 16
      },
      "doc_similarity": 0.20131685774813415,
      "segment_similarity": 0.06910900242127736,
      "scores": {
        "Comparison": 0.000992486526770368,
        "Contingency": 0.22744241919011218,
        "Expansion": 0.7257098340475591,
        "Temporal": 0.04539319220454493,
        "None": 0.0004620680310134405
      },
      "predicted": "Expansion",
      "importance_a": 0.375,
      "importance_b": 0.0
    },
    {
      "topic": "urban beekeeping",
      "segment_a": {
        "segment_id": "5d810a426530:2",
        "doc_id": "5d810a426530",
        "index": 2,
        "text": "Inspectors visit every registered apiary once a year.",
        "token_count": 8
      },
      "segment_b": {
        "segment_id": "625ca824ec44:0",
        "doc_id": "625ca824ec44",
        "index": 0,
        "text": "Rooftop beekeeping spread through the city after 2010.",
        "token_count": 8
      },
      "doc_similarity": 0.20131685774813415,
      "segment_similarity": 0.0,
      "scores": {
        "Comparison": 0.3395147279092759,
        "Contingency": 2.531868714396084e-11,
        "Expansion": 3.4905844007227445e-10,
        "Temporal": 0.0009161347368024076,
        "None": 0.6595691369795446
      },
      "predicted": "None",
      "importance_a": 0.375,
      "importance_b": 0.875
    },
    {
      "topic": "urban beekeeping",
      "segment_a": {
        "segment_id": "5d810a426530:0",
        "doc_id": "5d810a426530",
        "index": 0,
        "text": "The city council passed a beekeeping ordinance in 2014.",
        "token_count": 9
      },
      "segment_b": {
        "segment_id": "625ca824ec44:0",
        "doc_id": "625ca824ec44",
        "index": 0,
        "text": "Rooftop beekeeping spread through the city after 2010.",
        "token_count": 8
      },
      "doc_similarity": 0.20131685774813415,
      "segment_similarity": 0.24935708788745323,
      "scores": {
        "Comparison": 0.6578933601472569,
        "Contingency": 1.0037028563914774e-09,
        "Expansion": 3.691265002519128e-08,
        "Temporal": 0.009235320353018543,
        "None": 0.3328712815833717
      },
      "predicted": "Comparison",
      "importance_a": 0.875,
      "importance_b": 0.875
    },
    {
      "topic": "urban beekeeping",
      "segment_a": {
        "segment_id": "625ca824ec44:2",
        "doc_id": "625ca824ec44",
        "index": 2,
        "text": "While a rural hive may starve in late summer, urban bees find flowers in every season.",
        "token_count": 16
      },
      "segment_b": {
        "segment_id": "e9f1936c5557:2",
        "doc_id": "e9f1936c5557",
        "index": 2,
        "text": "The survey concluded that forage, not traffic, decides how much honey a city hive can make.",
        "token_count": 16
      },
      "doc_similarity": 0.2638683514781247,
      "segment_similarity": 0.07030592282587687,
      "scores": {
        "Comparison": 0.007452860959341868,
        "Contingency": 0.649549972703371,
        "Expansion": 0.3285558541024956,
        "Temporal": 0.01303689524239617,
        "None": 0.001404416992395282
      },
      "predicted": "Contingency",
      "importance_a": 0.0,
      "importance_b": 0.375
    },
    {
      "topic": "urban beekeeping",
      "segment_a": {
        "segment_id": "625ca824ec44:2",
        "doc_id": "625ca824ec44",
        "index": 2,
        "text": "While a rural hive may starve in late summer, urban bees find flowers in every season.",
        "token_count": 16
      },
      "segment_b": {
        "segment_id": "e9f1936c5557:0",
        "doc_id": "e9f1936c5557",
        "index": 0,
        "text": "A volunteer survey weighed urban hives every week for two years.",
        "token_count": 11
      },
      "doc_similarity": 0.2638683514781247,
      "segment_similarity": 0.10905669116511323,
      "scores": {
        "Comparison": 6.015562434986107e-05,
        "Contingency": 0.0032424404919718097,
        "Expansion": 0.5900245142667039,
        "Temporal": 0.38345322838133006,
        "None": 0.023219661235644326
      },
      "predicted": "Expansion",
      "importance_a": 0.0,
      "importance_b": 0.875
    },
    {
      "topic": "urban beekeeping",
      "segment_a": {
        "segment_id": "625ca824ec44:1",
        "doc_id": "625ca824ec44",
        "index": 1,
        "text": "Bees from rooftop hives forage in parks and along railway embankments, and the honey often tastes of linden blossom.",
        "token_count": 19
      },
      "segment_b": {
        "segment_id": "e9f1936c5557:1",
        "doc_id": "e9f1936c5557",
        "index": 1,
        "text": "Hives near the botanical garden gained the most weight, and rooftop hives above the market district produced the darkest honey.",
        "token_count": 20
      },
      "doc_similarity": 0.2638683514781247,
      "segment_similarity": 0.22414779159482282,
      "scores": {
        "Comparison": 0.010492879843101882,
        "Contingency": 0.09040618635034925,
        "Expansion": 0.5468113704557827,
        "Temporal": 0.29312893200401186,
        "None": 0.05916063134675445
      },
      "predicted": "Expansion",
      "importance_a": 0.375,
      "importance_b": 0.375
    },
    {
      "topic": "urban beekeeping",
      "segment_a": {
        "segment_id": "5d810a426530:1",
        "doc_id": "5d810a426530",
        "index": 1,
        "text": "Each rooftop apiary must register its hives and keep a water source, because bees otherwise crowd the neighbours' balconies.",
        "token_count": 19
      },
      "segment_b": {
        "segment_id": "625ca824ec44:1",
        "doc_id": "625ca824ec44",
        "index": 1,
        "text": "Bees from rooftop hives forage in parks and along railway embankments, and the honey often tastes of linden blossom.",
        "token_count": 19
      },
      "doc_similarity": 0.20131685774813415,
      "segment_similarity": 0.1754008365277923,
      "scores": {
        "Comparison": 0.031468757181807326,
        "Contingency": 0.24720683618980416,
        "Expansion": 0.4957760332228994,
        "Temporal": 0.20473027894270815,
        "None": 0.02081809446278093
      },
      "predicted": "Expansion",
      "importance_a": 0.375,
      "importance_b": 0.375
    },
    {
      "topic": "urban beekeeping",
      "segment_a": {
        "segment_id": "625ca824ec44:1",
        "doc_id": "625ca824ec44",
        "index": 1,
        "text": "Bees from rooftop hives forage in parks and along railway embankments, and the honey often tastes of linden blossom.",
        "token_count": 19
      },
      "segment_b": {
        "segment_id": "e9f1936c5557:2",
        "doc_id": "e9f1936c5557",
        "index": 2,
        "text": "The survey concluded that forage, not traffic, decides how much honey a city hive can make.",
        "token_count": 16
      },
      "doc_similarity": 0.2638683514781247,
      "segment_similarity": 0.12307763841170331,
      "scores": {
        "Comparison": 0.12604800569504956,
        "Contingency": 0.26838484901528714,
        "Expansion": 0.3106655119565365,
        "Temporal": 0.18806146709982274,
        "None": 0.10684016623330406
      },
      "predicted": "Expansion",
      "importance_a": 0.375,
      "importance_b": 0.375
    }
  ]
};

export const RECORDED_SEGMENT_IDS: string[] = [
  "20ac419cbf4e:0",
  "20ac419cbf4e:1",
  "20ac419cbf4e:3",
  "20ac419cbf4e:4",
  "3d3891bbba41:0",
  "3d3891bbba41:1",
  "3d3891bbba41:2",
  "3d3891bbba41:3",
  "5683dfdad044:0",
  "5683dfdad044:1",
  "5683dfdad044:2",
  "5d810a426530:0",
  "5d810a426530:1",
  "5d810a426530:2",
  "625ca824ec44:0",
  "625ca824ec44:1",
  "625ca824ec44:2",
  "69a2df121d57:0",
  "69a2df121d57:1",
  "69a2df121d57:3",
  "69a2df121d57:4",
  "7572c134dd59:0",
  "7572c134dd59:1",
  "7572c134dd59:2",
  "7c1686f37ecf:0",
  "7c1686f37ecf:1",
  "7c1686f37ecf:2",
  "e9f1936c5557:0",
  "e9f1936c5557:1",
  "e9f1936c5557:2",
  "ec1aaa9fb896:0",
  "ec1aaa9fb896:1",
  "ec1aaa9fb896:2",
  "ec1aaa9fb896:3"
];
