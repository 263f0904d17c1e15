/** Frozen API responses used across the UI tests. */

import type { AnalyzeResponse, MethodRecord } from '../src/api.js';

/** Actual service response for "I'm feeling too sad today :(". */
export const SAD_SAMPLE: AnalyzeResponse = {
	verdicts: [
		{ method: 'emoticons', polarity: 'negative', score: -1.0, detail: null },
		{
			method: 'categories',
			polarity: 'negative',
			score: -1.0,
			detail: { positive_matches: 0.0, negative_matches: 1.0 },
		},
		{
			method: 'strength',
			polarity: 'negative',
			score: -1.0,
			detail: { pos_strength: 1.0, neg_strength: 2.0 },
		},
		{
			method: 'synsets',
			polarity: 'negative',
			score: -0.75,
			detail: { avg_pos: 0.0, avg_neg: 0.75, matches: 1.0 },
		},
		{ method: 'concepts', polarity: 'undetermined', score: 0.0, detail: null },
		{ method: 'valence', polarity: 'negative', score: 1.9, detail: { matches: 1.0 } },
		{
			method: 'moods',
			polarity: 'negative',
			score: -1.0,
			detail: { positive_matches: 0.0, negative_matches: 1.0 },
		},
		{
			method: 'bayes',
			polarity: 'negative',
			score: -0.32158218804311023,
			detail: {
				p_positive: 0.2820131596916118,
				p_negative: 0.603595347734722,
				p_neutral: 0.11439149257366622,
			},
		},
	],
	combined: {
		method: 'combined',
		polarity: 'negative',
		score: -24.0,
		detail: { positive_weight: 0.0, negative_weight: 24.0 },
	},
	elapsed_ms: 1.25,
};

export const ALL_UNDETERMINED: AnalyzeResponse = {
	verdicts: [
		{ method: 'emoticons', polarity: 'undetermined', score: 0.0, detail: null },
		{ method: 'concepts', polarity: 'undetermined', score: 0.0, detail: null },
	],
	combined: { method: 'combined', polarity: 'undetermined', score: 0.0, detail: null },
	elapsed_ms: 0.4,
};

export const METHODS: MethodRecord[] = [
	{ id: 'emoticons', description: 'first emoticon polarity', lexicon_loaded: true },
	{ id: 'categories', description: 'affect category counts', lexicon_loaded: true },
	{ id: 'strength', description: 'graded strength rules', lexicon_loaded: true },
	{ id: 'valence', description: 'pleasantness average', lexicon_loaded: false },
];
