/**
 * Pure view-model builders for the comparison view.
 *
 * Scores are passed through verbatim; the only derived quantity is the
 * bar width used to draw a verdict's magnitude, which is a presentation
 * scaling and never displayed as a number.
 */

import type { AnalyzeResponse, VerdictRecord } from './api.js';

export interface MethodRow {
	method: string;
	polarity: string;
	score: number;
	scoreLabel: string;
	barFraction: number;
	covered: boolean;
}

/** Per-method full scale used to size bars (not shown to the user). */
const SCORE_SPANS: Record<string, number> = {
	emoticons: 1,
	categories: 1,
	strength: 4,
	synsets: 1,
	concepts: 1,
	moods: 1,
	bayes: 1,
};

function barFraction(verdict: VerdictRecord): number {
	if (verdict.polarity === 'undetermined') return 0;
	if (verdict.method === 'valence') {
		// 1..9 scale centred on 5.
		return Math.min(1, Math.abs(verdict.score - 5) / 4);
	}
	if (verdict.method === 'combined') {
		const detail = verdict.detail ?? {};
		const pos = detail['positive_weight'] ?? 0;
		const neg = detail['negative_weight'] ?? 0;
		const total = pos + neg;
		if (total > 0) return Math.abs(pos - neg) / total;
		const deciding = detail['deciding_weight'];
		return deciding ? 1 : 0;
	}
	const span = SCORE_SPANS[verdict.method] ?? 1;
	return Math.min(1, Math.abs(verdict.score) / span);
}

export function toRow(verdict: VerdictRecord): MethodRow {
	return {
		method: verdict.method,
		polarity: verdict.polarity,
		score: verdict.score,
		scoreLabel:
			verdict.polarity === 'undetermined' ? 'no verdict' : verdict.score.toString(),
		barFraction: barFraction(verdict),
		covered: verdict.polarity === 'positive' || verdict.polarity === 'negative',
	};
}

export function methodRows(response: AnalyzeResponse): MethodRow[] {
	return response.verdicts.map(toRow);
}

export function combinedRow(response: AnalyzeResponse): MethodRow | null {
	return response.combined ? toRow(response.combined) : null;
}

export function allUndetermined(response: AnalyzeResponse): boolean {
	return response.verdicts.every((v) => v.polarity === 'undetermined');
}

export interface CoverageNote {
	covered: number;
	total: number;
}

/** How many of the returned verdicts produced a polarity. */
export function coverageNote(response: AnalyzeResponse): CoverageNote {
	const covered = response.verdicts.filter(
		(v) => v.polarity === 'positive' || v.polarity === 'negative',
	).length;
	return { covered, total: response.verdicts.length };
}
