import { describe, expect, it } from 'vitest';

import {
	allUndetermined,
	combinedRow,
	coverageNote,
	methodRows,
	toRow,
} from '../src/viewmodel.js';
import { ALL_UNDETERMINED, SAD_SAMPLE } from './fixtures.js';

describe('methodRows', () => {
	it('keeps one row per verdict in response order', () => {
		const rows = methodRows(SAD_SAMPLE);
		expect(rows.map((r) => r.method)).toEqual(
			SAD_SAMPLE.verdicts.map((v) => v.method),
		);
	});

	it('passes polarities and scores through verbatim', () => {
		const rows = methodRows(SAD_SAMPLE);
		for (const [i, verdict] of SAD_SAMPLE.verdicts.entries()) {
			expect(rows[i].polarity).toBe(verdict.polarity);
			expect(rows[i].score).toBe(verdict.score);
			if (verdict.polarity !== 'undetermined') {
				expect(rows[i].scoreLabel).toBe(verdict.score.toString());
			}
		}
	});

	it('marks undetermined rows as not covered with an empty bar', () => {
		const row = methodRows(SAD_SAMPLE).find((r) => r.method === 'concepts')!;
		expect(row.covered).toBe(false);
		expect(row.barFraction).toBe(0);
		expect(row.scoreLabel).toBe('no verdict');
	});

	it('keeps bar fractions inside [0, 1]', () => {
		for (const row of methodRows(SAD_SAMPLE)) {
			expect(row.barFraction).toBeGreaterThanOrEqual(0);
			expect(row.barFraction).toBeLessThanOrEqual(1);
		}
	});

	it('centres the 1-9 valence scale on 5', () => {
		const neutralish = toRow({
			method: 'valence',
			polarity: 'positive',
			score: 5.0,
			detail: null,
		});
		expect(neutralish.barFraction).toBe(0);
		const strong = toRow({
			method: 'valence',
			polarity: 'negative',
			score: 1.0,
			detail: null,
		});
		expect(strong.barFraction).toBe(1);
	});
});

describe('combinedRow', () => {
	it('is present when the response carries a combination', () => {
		const row = combinedRow(SAD_SAMPLE)!;
		expect(row.method).toBe('combined');
		expect(row.polarity).toBe('negative');
	});

	it('sizes the bar from the vote weights', () => {
		const row = combinedRow(SAD_SAMPLE)!;
		expect(row.barFraction).toBe(1); // 24 of 24 weight on one side
	});

	it('is null when the server sent none', () => {
		expect(combinedRow({ ...SAD_SAMPLE, combined: null })).toBeNull();
	});
});

describe('coverage helpers', () => {
	it('counts covering verdicts', () => {
		expect(coverageNote(SAD_SAMPLE)).toEqual({ covered: 7, total: 8 });
	});

	it('detects the nothing-covered state', () => {
		expect(allUndetermined(ALL_UNDETERMINED)).toBe(true);
		expect(allUndetermined(SAD_SAMPLE)).toBe(false);
	});
});
