import * as THREE from 'three';
import { OrbitControls } from 'three/addons/controls/OrbitControls.js';
import type { StateResponse } from './api';

/** Flatten [[x,y,z], ...] into the layout BufferGeometry wants. */
export function flattenPoints(points: number[][]): Float32Array {
  const out = new Float32Array(points.length * 3);
  for (let i = 0; i < points.length; i++) {
    out[i * 3] = points[i][0];
    out[i * 3 + 1] = points[i][1];
    out[i * 3 + 2] = points[i][2];
  }
  return out;
}

/** Spine polyline as drawn: base origin first, then the disc centers. */
export function spinePolyline(state: StateResponse): number[][] {
  return [[0, 0, 0], ...state.polyline_mm];
}

export interface SpineViewOptions {
  discRadius?: number;
  tipRadius?: number;
}

/**
 * Z-up 3D view, 1 scene unit = 1 mm. The grid plane at z = 0 is the
 * faceplate the spine rises from; everything drawn comes straight out of
 * service responses.
 */
export class SpineView {
  private scene = new THREE.Scene();
  private camera: THREE.PerspectiveCamera;
  private renderer: THREE.WebGLRenderer;
  private controls: OrbitControls;
  private spineLine: THREE.Line;
  private discs: THREE.InstancedMesh | null = null;
  private discGeometry: THREE.SphereGeometry;
  private discMaterial: THREE.MeshLambertMaterial;
  private tipMarker: THREE.Mesh;
  private cloud: THREE.Points | null = null;
  private discRadius: number;

  constructor(container: HTMLElement, options: SpineViewOptions = {}) {
    this.discRadius = options.discRadius ?? 4;
    const tipRadius = options.tipRadius ?? 6;

    this.scene.background = new THREE.Color(0x10141c);
    this.camera = new THREE.PerspectiveCamera(
      45,
      container.clientWidth / Math.max(container.clientHeight, 1),
      1,
      4000,
    );
    this.camera.up.set(0, 0, 1);
    this.camera.position.set(240, -240, 180);

    this.renderer = new THREE.WebGLRenderer({ antialias: true });
    this.renderer.setPixelRatio(window.devicePixelRatio);
    this.renderer.setSize(container.clientWidth, container.clientHeight);
    container.appendChild(this.renderer.domElement);

    this.controls = new OrbitControls(this.camera, this.renderer.domElement);
    this.controls.enableDamping = true;
    this.controls.target.set(0, 0, 80);

    // base plane; GridHelper lies in XZ by default, rotate into XY at z=0
    const grid = new THREE.GridHelper(400, 40, 0x3a4a63, 0x232c3d);
    grid.rotation.x = Math.PI / 2;
    this.scene.add(grid);
    this.scene.add(new THREE.AxesHelper(40));

    this.scene.add(new THREE.HemisphereLight(0xbfd4ff, 0x202028, 1.1));
    const sun = new THREE.DirectionalLight(0xffffff, 1.4);
    sun.position.set(150, -100, 300);
    this.scene.add(sun);

    this.spineLine = new THREE.Line(
      new THREE.BufferGeometry(),
      new THREE.LineBasicMaterial({ color: 0x4a9eff }),
    );
    this.scene.add(this.spineLine);

    this.discGeometry = new THREE.SphereGeometry(1, 16, 12);
    this.discMaterial = new THREE.MeshLambertMaterial({ color: 0x9fb8d8 });

    this.tipMarker = new THREE.Mesh(
      new THREE.SphereGeometry(tipRadius, 24, 16),
      new THREE.MeshLambertMaterial({ color: 0xff6b35, emissive: 0x903010 }),
    );
    this.scene.add(this.tipMarker);

    const resize = () => {
      const w = container.clientWidth;
      const h = Math.max(container.clientHeight, 1);
      this.camera.aspect = w / h;
      this.camera.updateProjectionMatrix();
      this.renderer.setSize(w, h);
    };
    window.addEventListener('resize', resize);

    const animate = () => {
      requestAnimationFrame(animate);
      this.controls.update();
      this.renderer.render(this.scene, this.camera);
    };
    animate();
  }

  setState(state: StateResponse): void {
    const line = flattenPoints(spinePolyline(state));
    this.spineLine.geometry.dispose();
    this.spineLine.geometry = new THREE.BufferGeometry();
    this.spineLine.geometry.setAttribute('position', new THREE.BufferAttribute(line, 3));

    const centers = state.polyline_mm;
    if (this.discs === null || this.discs.count !== centers.length) {
      if (this.discs !== null) this.scene.remove(this.discs);
      this.discs = new THREE.InstancedMesh(this.discGeometry, this.discMaterial, centers.length);
      this.scene.add(this.discs);
    }
    const m = new THREE.Matrix4();
    const r = this.discRadius;
    for (let i = 0; i < centers.length; i++) {
      m.makeScale(r, r, r);
      m.setPosition(centers[i][0], centers[i][1], centers[i][2]);
      this.discs.setMatrixAt(i, m);
    }
    this.discs.instanceMatrix.needsUpdate = true;

    const [tx, ty, tz] = state.tip.position_mm;
    this.tipMarker.position.set(tx, ty, tz);
  }

  /** Dim the pose while a newer command is still being computed. */
  setStale(stale: boolean): void {
    (this.spineLine.material as THREE.LineBasicMaterial).opacity = stale ? 0.45 : 1.0;
    (this.spineLine.material as THREE.LineBasicMaterial).transparent = stale;
  }

  setCloud(points: number[][] | null): void {
    if (this.cloud !== null) {
      this.scene.remove(this.cloud);
      this.cloud.geometry.dispose();
      this.cloud = null;
    }
    if (points === null || points.length === 0) return;
    const geometry = new THREE.BufferGeometry();
    geometry.setAttribute('position', new THREE.BufferAttribute(flattenPoints(points), 3));
    this.cloud = new THREE.Points(
      geometry,
      new THREE.PointsMaterial({
        color: 0x4aa3a3,
        size: 2,
        transparent: true,
        opacity: 0.4,
        depthWrite: false,
      }),
    );
    this.scene.add(this.cloud);
  }

  setCloudVisible(on: boolean): void {
    if (this.cloud !== null) this.cloud.visible = on;
  }
}
